#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "reprfn/proximity.hpp"
#include "reprfn/repfunc.hpp"
#include "reprfn/sequences.hpp"
#include "reprfn/squares_oracle.hpp"

namespace reprfn {

// Flat table: CSV emits it with a header row, JSON as an array of objects
// keyed by column name. Both carry the same values.
struct Table {
  using Cell = std::variant<std::uint64_t, std::int64_t, std::string>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

Table spectrum_table(const RepSpectrum& spectrum);
Table trace_table(const MaxRepTrace& trace);
Table pair_trace_table(const PairTrace& trace);
Table oracle_table(const OracleReport& report, bool records_only);

// One row per n: the perturbation and the pair trace against the squares.
Table classify_table(const SequencePrefix& squares, const PerturbedPrefix& perturbed,
                     const PairTrace& trace, const UpperClassEvidence& evidence);

}  // namespace reprfn
