#include "reprfn/emit.hpp"

#include <algorithm>

#include <json.hpp>

namespace reprfn {

namespace {

void write_csv_field(const std::string& s, std::ostream& out) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    write_csv_field(table.columns[i], out);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&out](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
              write_csv_field(v, out);
            } else {
              out << v;
            }
          },
          row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  out << "[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
    }
    out << (r ? ",\n  " : "\n  ") << obj.dump();
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(const Table& table, Format format, std::ostream& out) {
  if (format == Format::Csv) write_csv(table, out);
  else write_json(table, out);
}

Table spectrum_table(const RepSpectrum& spectrum) {
  Table t{{"sum", "count"}, {}};
  t.rows.reserve(spectrum.size());
  for (const auto& [sum, count] : spectrum) t.rows.push_back({sum, count});
  return t;
}

Table trace_table(const MaxRepTrace& trace) {
  Table t{{"k", "u"}, {}};
  for (std::size_t k = 1; k <= trace.size(); ++k) {
    t.rows.push_back({std::uint64_t{k}, trace.at(k)});
  }
  return t;
}

Table pair_trace_table(const PairTrace& trace) {
  Table t{{"k", "u", "v", "d", "lower_num", "lower_den", "upper", "w_num", "w_den"}, {}};
  for (const auto& r : trace) {
    t.rows.push_back({std::uint64_t{r.k}, r.u, r.v, r.d, r.lower.num, r.lower.den, r.upper,
                      r.w_running.num, r.w_running.den});
  }
  return t;
}

Table oracle_table(const OracleReport& report, bool records_only) {
  Table t{{"n", "count", "is_record"}, {}};
  for (const auto& row : records_only ? report.records : report.rows) {
    t.rows.push_back({row.n, row.count, std::uint64_t{row.is_record}});
  }
  return t;
}

Table classify_table(const SequencePrefix& squares, const PerturbedPrefix& perturbed,
                     const PairTrace& trace, const UpperClassEvidence& evidence) {
  Table t{{"n", "square", "b", "bound", "offset", "clamped", "bound_violation", "u", "v", "d",
           "w_num", "w_den", "w_record"},
          {}};
  const auto& rep = perturbed.report;
  auto listed = [](const std::vector<std::size_t>& v, std::size_t n) {
    return std::uint64_t{std::binary_search(v.begin(), v.end(), n)};
  };
  std::size_t next_record = 0;
  for (std::size_t n = 1; n <= trace.size(); ++n) {
    const auto& row = trace[n - 1];
    std::uint64_t record = 0;
    if (next_record < evidence.records.size() && evidence.records[next_record].k == n) {
      record = 1;
      ++next_record;
    }
    t.rows.push_back({std::uint64_t{n}, static_cast<std::int64_t>(squares.term(n)),
                      static_cast<std::int64_t>(perturbed.prefix.term(n)), rep.bounds[n - 1],
                      rep.offsets[n - 1], listed(rep.clamped, n), listed(rep.bound_violations, n),
                      row.u, row.v, row.d, row.w_running.num, row.w_running.den, record});
  }
  return t;
}

}  // namespace reprfn
