#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reprfn/error.hpp"

namespace reprfn {

using Term = std::int64_t;

// The vanishing factor g in the perturbation bound f(n) = u(n) * g(n).
struct GrowthSpec {
  enum class Form { Const, Power, InvLog };

  Form form = Form::Const;
  double c = 0.0;
  double alpha = 0.0;  // Power only: g(n) = c * n^(-alpha)

  static GrowthSpec constant(double c);
  static GrowthSpec power(double c, double alpha);
  static GrowthSpec inv_log(double c);

  // Parses `const:C`, `pow:C,ALPHA` or `invlog:C`.
  static GrowthSpec parse(std::string_view text);

  double operator()(std::uint64_t n) const;

  std::string to_string() const;
  bool operator==(const GrowthSpec&) const = default;
};

struct Squares {
  bool operator==(const Squares&) const = default;
};

// c2*n^2 + c1*n + c0 for n = 1, 2, ...
struct Polynomial {
  std::int64_t c2 = 0;
  std::int64_t c1 = 0;
  std::int64_t c0 = 0;
  bool operator==(const Polynomial&) const = default;
};

struct FromFile {
  std::string path;
  bool operator==(const FromFile&) const = default;
};

struct PerturbedSquares {
  GrowthSpec growth;
  std::uint64_t seed = 0;
  bool operator==(const PerturbedSquares&) const = default;
};

using SequenceSpec = std::variant<Squares, Polynomial, FromFile, PerturbedSquares>;

// Text grammar: `squares`, `poly:C2,C1,C0`, `file:PATH`,
// `perturb:g=<const:C|pow:C,ALPHA|invlog:C>:seed=N`.
SequenceSpec parse_sequence_spec(std::string_view text);
std::string to_string(const SequenceSpec& spec);

// The first k terms of a strictly increasing sequence of naturals. Storage is
// 0-based; term(i) uses the 1-based index of the enumeration a_1 < a_2 < ...
struct SequencePrefix {
  std::vector<Term> terms;

  std::size_t size() const noexcept { return terms.size(); }
  bool empty() const noexcept { return terms.empty(); }
  Term term(std::size_t i) const { return terms.at(i - 1); }
  Term back() const { return terms.back(); }
  SequencePrefix head(std::size_t k) const;

  bool operator==(const SequencePrefix&) const = default;
};

struct ValidationError {
  ErrorKind kind;     // NotStrictlyIncreasing or NegativeTerm
  std::size_t index;  // 1-based
  bool operator==(const ValidationError&) const = default;
};

// nullopt when the prefix is strictly increasing and nonnegative.
std::optional<ValidationError> validate(std::span<const Term> terms);
inline std::optional<ValidationError> validate(const SequencePrefix& prefix) {
  return validate(prefix.terms);
}

SequencePrefix materialize(const SequenceSpec& spec, std::size_t k);

// Reads the sequence file format: one base-10 integer per line, blank lines
// and lines starting with '#' ignored.
std::vector<Term> read_sequence_file(const std::string& path);

struct PerturbationReport {
  std::vector<std::uint64_t> bounds;       // floor(f(n)) for n = 1..k
  std::vector<std::int64_t> offsets;       // drawn e_n
  std::vector<std::size_t> clamped;        // 1-based indices moved by the repair
  std::vector<std::size_t> bound_violations;  // 1-based, |b_n - n^2| > floor(f(n))

  std::size_t clamp_count() const noexcept { return clamped.size(); }
};

struct PerturbedPrefix {
  SequencePrefix prefix;
  PerturbationReport report;
};

// b_n = n^2 + e_n with e_n uniform in [-floor(f(n)), floor(f(n))] and
// f(n) = u_of_squares[n-1] * g(n), followed by the monotonicity repair
// b_1 <- max(b_1, 0), b_n <- max(b_n, b_{n-1} + 1).
PerturbedPrefix perturb_squares(const GrowthSpec& g, std::uint64_t seed, std::size_t k,
                                std::span<const std::uint64_t> u_of_squares);

}  // namespace reprfn
