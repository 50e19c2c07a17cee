#include "reprfn/sequences.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <system_error>
#include <type_traits>

#include "reprfn/repfunc.hpp"
#include "reprfn/splitmix64.hpp"

namespace reprfn {

namespace {

constexpr Term kMaxTerm = std::numeric_limits<Term>::max();

// Perturbation bounds stay far below the int64 range so that n^2 + e_n and
// the PRNG interval width never overflow.
constexpr double kMaxBound = 4611686018427387904.0;  // 2^62

template <class T>
bool parse_number(std::string_view text, T& value) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if constexpr (std::is_floating_point_v<T>) {
    if (ec == std::errc() && !std::isfinite(value)) return false;
  }
  return ec == std::errc() && ptr == last;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

double checked_growth_param(double x, std::string_view what) {
  if (!std::isfinite(x) || x < 0.0) {
    throw Error(ErrorKind::InvalidGrowth,
                std::string(what) + " must be a finite nonnegative number");
  }
  return x;
}

void check_prefix(const std::vector<Term>& terms, ErrorKind kind, std::string_view origin) {
  if (auto err = validate(terms)) {
    throw Error(kind, std::string(origin) + ": " + std::string(to_string(err->kind)) +
                          " at index " + std::to_string(err->index));
  }
}

SequencePrefix materialize_squares(std::size_t k) {
  // n^2 <= INT64_MAX for n <= 3037000499.
  if (k > 3037000499ULL) throw Error(ErrorKind::Overflow, "squares exceed 64-bit range");
  SequencePrefix out;
  out.terms.reserve(k);
  for (std::size_t n = 1; n <= k; ++n) out.terms.push_back(static_cast<Term>(n * n));
  return out;
}

SequencePrefix materialize_polynomial(const Polynomial& p, std::size_t k) {
  const bool shape_ok = p.c2 > 0 || (p.c2 == 0 && p.c1 > 0 && p.c0 >= -p.c1);
  if (!shape_ok) {
    throw Error(ErrorKind::NonIncreasingPolynomial,
                "need c2 > 0, or c2 = 0 with c1 > 0 and c0 >= -c1");
  }
  SequencePrefix out;
  out.terms.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) {
    const __int128 n = static_cast<__int128>(i);
    const __int128 value = p.c2 * n * n + p.c1 * n + p.c0;
    if (value > kMaxTerm) throw Error(ErrorKind::Overflow, "polynomial exceeds 64-bit range");
    if (value < 0) {
      throw Error(ErrorKind::NonIncreasingPolynomial,
                  "negative value at n = " + std::to_string(i));
    }
    const auto term = static_cast<Term>(value);
    if (!out.terms.empty() && term <= out.terms.back()) {
      throw Error(ErrorKind::NonIncreasingPolynomial,
                  "not strictly increasing at n = " + std::to_string(i));
    }
    out.terms.push_back(term);
  }
  return out;
}

}  // namespace

GrowthSpec GrowthSpec::constant(double c) {
  return {Form::Const, checked_growth_param(c, "const c"), 0.0};
}

GrowthSpec GrowthSpec::power(double c, double alpha) {
  return {Form::Power, checked_growth_param(c, "pow c"), checked_growth_param(alpha, "pow alpha")};
}

GrowthSpec GrowthSpec::inv_log(double c) {
  return {Form::InvLog, checked_growth_param(c, "invlog c"), 0.0};
}

GrowthSpec GrowthSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::InvalidGrowth, "expected const:C, pow:C,ALPHA or invlog:C");
  }
  const auto form = text.substr(0, colon);
  const auto args = text.substr(colon + 1);
  double c = 0.0;
  if (form == "const" || form == "invlog") {
    if (!parse_number(args, c)) {
      throw Error(ErrorKind::InvalidGrowth, "bad number '" + std::string(args) + "'");
    }
    return form == "const" ? constant(c) : inv_log(c);
  }
  if (form == "pow") {
    const auto comma = args.find(',');
    double alpha = 0.0;
    if (comma == std::string_view::npos || !parse_number(args.substr(0, comma), c) ||
        !parse_number(args.substr(comma + 1), alpha)) {
      throw Error(ErrorKind::InvalidGrowth, "expected pow:C,ALPHA");
    }
    return power(c, alpha);
  }
  throw Error(ErrorKind::InvalidGrowth, "unknown growth form '" + std::string(form) + "'");
}

double GrowthSpec::operator()(std::uint64_t n) const {
  const double x = static_cast<double>(n);
  switch (form) {
    case Form::Const: return c;
    case Form::Power: return c * std::pow(x, -alpha);
    case Form::InvLog: return c / std::log(x + 1.0);
  }
  return 0.0;
}

std::string GrowthSpec::to_string() const {
  switch (form) {
    case Form::Const: return "const:" + format_double(c);
    case Form::Power: return "pow:" + format_double(c) + "," + format_double(alpha);
    case Form::InvLog: return "invlog:" + format_double(c);
  }
  return {};
}

SequenceSpec parse_sequence_spec(std::string_view text) {
  if (text == "squares") return Squares{};
  if (text.starts_with("poly:")) {
    const auto args = text.substr(5);
    const auto c1 = args.find(',');
    const auto c0 = c1 == std::string_view::npos ? c1 : args.find(',', c1 + 1);
    Polynomial p;
    if (c0 == std::string_view::npos || !parse_number(args.substr(0, c1), p.c2) ||
        !parse_number(args.substr(c1 + 1, c0 - c1 - 1), p.c1) ||
        !parse_number(args.substr(c0 + 1), p.c0)) {
      throw Error(ErrorKind::InvalidSpec, "expected poly:C2,C1,C0 with 64-bit integers");
    }
    return p;
  }
  if (text.starts_with("file:")) {
    if (text.size() == 5) throw Error(ErrorKind::InvalidSpec, "empty file path");
    return FromFile{std::string(text.substr(5))};
  }
  if (text.starts_with("perturb:g=")) {
    const auto body = text.substr(10);
    const auto seed_at = body.rfind(":seed=");
    std::uint64_t seed = 0;
    if (seed_at == std::string_view::npos || !parse_number(body.substr(seed_at + 6), seed)) {
      throw Error(ErrorKind::InvalidSpec, "expected perturb:g=<growth>:seed=N");
    }
    return PerturbedSquares{GrowthSpec::parse(body.substr(0, seed_at)), seed};
  }
  throw Error(ErrorKind::InvalidSpec, "unrecognised sequence spec '" + std::string(text) + "'");
}

std::string to_string(const SequenceSpec& spec) {
  struct Visitor {
    std::string operator()(const Squares&) const { return "squares"; }
    std::string operator()(const Polynomial& p) const {
      return "poly:" + std::to_string(p.c2) + "," + std::to_string(p.c1) + "," +
             std::to_string(p.c0);
    }
    std::string operator()(const FromFile& f) const { return "file:" + f.path; }
    std::string operator()(const PerturbedSquares& p) const {
      return "perturb:g=" + p.growth.to_string() + ":seed=" + std::to_string(p.seed);
    }
  };
  return std::visit(Visitor{}, spec);
}

SequencePrefix SequencePrefix::head(std::size_t k) const {
  if (k > terms.size()) throw Error(ErrorKind::InvalidArgument, "head longer than prefix");
  return SequencePrefix{std::vector<Term>(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(k))};
}

std::optional<ValidationError> validate(std::span<const Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] < 0) return ValidationError{ErrorKind::NegativeTerm, i + 1};
    if (i > 0 && terms[i] <= terms[i - 1]) {
      return ValidationError{ErrorKind::NotStrictlyIncreasing, i + 1};
    }
  }
  return std::nullopt;
}

std::vector<Term> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open '" + path + "'");
  std::vector<Term> terms;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = trim(view);
    if (view.empty() || view.front() == '#') continue;
    Term value = 0;
    if (!parse_number(view, value)) {
      throw Error(ErrorKind::MalformedFile,
                  path + ":" + std::to_string(line_no) + ": not a 64-bit integer");
    }
    if (value < 0) {
      throw Error(ErrorKind::MalformedFile,
                  path + ":" + std::to_string(line_no) + ": negative value");
    }
    if (!terms.empty() && value <= terms.back()) {
      throw Error(ErrorKind::MalformedFile,
                  path + ":" + std::to_string(line_no) + ": not strictly increasing");
    }
    terms.push_back(value);
  }
  return terms;
}

PerturbedPrefix perturb_squares(const GrowthSpec& g, std::uint64_t seed, std::size_t k,
                                std::span<const std::uint64_t> u_of_squares) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  if (u_of_squares.size() < k) {
    throw Error(ErrorKind::InvalidArgument, "need u(n) for every n <= k");
  }
  const SequencePrefix squares = materialize_squares(k);

  PerturbedPrefix out;
  auto& terms = out.prefix.terms;
  auto& report = out.report;
  terms.reserve(k);
  report.bounds.reserve(k);
  report.offsets.reserve(k);

  SplitMix64 rng(seed);
  for (std::size_t n = 1; n <= k; ++n) {
    const double f = static_cast<double>(u_of_squares[n - 1]) * g(n);
    if (!(f >= 0.0) || f >= kMaxBound) {
      throw Error(ErrorKind::Overflow, "perturbation bound out of range at n = " + std::to_string(n));
    }
    const auto bound = static_cast<std::uint64_t>(std::floor(f));
    const Term square = squares.terms[n - 1];
    if (square > kMaxTerm - 2 * static_cast<Term>(bound)) {
      throw Error(ErrorKind::Overflow, "perturbed term exceeds 64-bit range");
    }
    const std::int64_t offset = rng.symmetric(bound);
    Term b = square + offset;
    const Term floor_value = n == 1 ? 0 : terms.back() + 1;
    if (b < floor_value) {
      b = floor_value;
      report.clamped.push_back(n);
    }
    const auto deviation = static_cast<std::uint64_t>(b > square ? b - square : square - b);
    if (deviation > bound) report.bound_violations.push_back(n);

    terms.push_back(b);
    report.bounds.push_back(bound);
    report.offsets.push_back(offset);
  }
  return out;
}

SequencePrefix materialize(const SequenceSpec& spec, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  struct Visitor {
    std::size_t k;
    SequencePrefix operator()(const Squares&) const { return materialize_squares(k); }
    SequencePrefix operator()(const Polynomial& p) const { return materialize_polynomial(p, k); }
    SequencePrefix operator()(const FromFile& f) const {
      auto terms = read_sequence_file(f.path);
      if (terms.size() < k) {
        throw Error(ErrorKind::FileTooShort, f.path + " has " + std::to_string(terms.size()) +
                                                 " terms, need " + std::to_string(k));
      }
      terms.resize(k);
      return SequencePrefix{std::move(terms)};
    }
    SequencePrefix operator()(const PerturbedSquares& p) const {
      const auto u = u_trace(materialize_squares(k));
      return perturb_squares(p.growth, p.seed, k, u.values).prefix;
    }
  };
  auto prefix = std::visit(Visitor{k}, spec);
  check_prefix(prefix.terms, ErrorKind::InvalidArgument, "materialize");
  return prefix;
}

}  // namespace reprfn
