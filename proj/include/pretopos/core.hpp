#pragma once

// Finite carriers and total functions between them. Everything else in the
// library is built from these two value types.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pretopos {

using Index = std::size_t;
using Json = nlohmann::json;

/// Default limit on the number of candidate maps a brute-force check may visit.
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

enum class ErrorKind {
  OutOfRange,
  LengthMismatch,
  CompositionMismatch,
  CapExceeded,
  ParallelMismatch,
  DomainMismatch,
  NonCommuting,
  NotTotal,
  NotUnique,
  NotEquivalenceRelation,
  NotPreserving,
  NotMono,
  FiberBoundExceeded,
  NotSurjective,
  ParseError,
  ValidationError,
  DuplicateName,
  UnknownCommand,
  UnknownBinding,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A finite carrier {0, ..., size-1}. Constructed objects carry a decoder
/// describing what each index stands for (a pair, an injection tag, a tree).
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::size_t size, std::string name = {});
  FinSet(std::size_t size, std::vector<std::string> decoder, std::string name = {});

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  const std::string& name() const noexcept { return name_; }
  bool has_decoder() const noexcept { return decoder_ != nullptr; }
  /// Human-readable description of element i; the bare index without a decoder.
  std::string describe(Index i) const;
  const std::vector<std::string>* decoder() const noexcept { return decoder_.get(); }

  FinSet renamed(std::string name) const;

  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  std::size_t size_ = 0;
  std::string name_;
  std::shared_ptr<const std::vector<std::string>> decoder_;
};

/// Object identity used when composing: equal sizes, and equal decoders when
/// both sides carry one.
bool compatible(const FinSet& a, const FinSet& b);

class FinMap {
 public:
  /// The empty map on the empty carrier.
  FinMap() = default;
  /// Validates totality; throws LengthMismatch or OutOfRange.
  FinMap(FinSet dom, FinSet cod, std::vector<Index> table);

  const FinSet& dom() const noexcept { return dom_; }
  const FinSet& cod() const noexcept { return cod_; }
  const std::vector<Index>& table() const noexcept { return table_; }
  Index operator()(Index i) const { return table_[i]; }

  /// Equality is by carrier sizes and tables.
  friend bool operator==(const FinMap& a, const FinMap& b);

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<Index> table_;
};

FinSet mk_finset(std::size_t n, std::string name = {});
FinMap mk_map(const FinSet& dom, const FinSet& cod, std::vector<Index> table);
FinMap identity(const FinSet& a);
/// g after f. Throws CompositionMismatch unless cod(f) and dom(g) agree.
FinMap compose(const FinMap& g, const FinMap& f);

/// |B|^|A|, saturated at `limit + 1` so callers can compare against a cap.
std::uint64_t hom_count(std::size_t a, std::size_t b, std::uint64_t limit = kDefaultCap);

/// Throws CapExceeded when |B|^|A| > cap.
void require_hom_within(std::size_t a, std::size_t b, std::uint64_t cap);

/// Visits every table A -> B in lexicographic order (first entry most
/// significant). The visitor returns false to stop early. Throws CapExceeded.
void for_each_table(std::size_t a, std::size_t b, std::uint64_t cap,
                    const std::function<bool(const std::vector<Index>&)>& visit);

/// Number of ways to pick one entry from every option list, saturated at limit + 1.
std::uint64_t choice_count(const std::vector<std::vector<Index>>& options,
                           std::uint64_t limit = kDefaultCap);

/// Visits every vector picking one entry from each option list, in
/// lexicographic order of positions. Throws CapExceeded.
void for_each_choice(const std::vector<std::vector<Index>>& options, std::uint64_t cap,
                     const std::function<bool(const std::vector<Index>&)>& visit);

std::vector<FinMap> hom_enumerate(const FinSet& a, const FinSet& b,
                                  std::uint64_t cap = kDefaultCap);

std::optional<FinMap> is_iso(const FinMap& f);
bool is_mono(const FinMap& f);
bool is_surjective(const FinMap& f);
inline bool is_epi_fast(const FinMap& f) { return is_surjective(f); }

class Certificate;
/// Quantifies over all pairs g, h : cod(f) -> C with |C| <= 2 and reports a
/// pair with g∘f = h∘f, g != h when f is not epi.
Certificate is_epi_bruteforce(const FinMap& f, std::uint64_t cap = kDefaultCap);

/// Elements of dom(f) over b, ascending.
std::vector<Index> fiber(const FinMap& f, Index b);
std::vector<std::vector<Index>> fibers(const FinMap& f);

/// Dense rows x cols truth table.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool at(Index i, Index j) const { return cells_[i * cols_ + j] != 0; }
  void set(Index i, Index j, bool v = true) { cells_[i * cols_ + j] = v ? 1 : 0; }
  std::size_t count() const;
  std::vector<bool> row(Index i) const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<unsigned char> cells_;
};

Json to_json(const FinSet& a);
Json to_json(const FinMap& f);
/// The true cells as a list of [i, j] pairs.
Json to_json(const BoolMatrix& m);

/// Machine-readable record of a construction or verification run.
class Certificate {
 public:
  static constexpr int kSchemaVersion = 1;

  Certificate() = default;
  explicit Certificate(std::string kind) : kind(std::move(kind)) {}

  std::string kind;
  Json inputs = Json::object();
  Json witnesses = Json::object();
  bool passed = true;
  Json caps = Json::object();
  std::optional<std::uint64_t> seed;

  /// Marks the certificate failed. Only the first counterexample is kept;
  /// later ones bump the failure count.
  void fail(std::string_view check, Json counterexample);
  std::uint64_t failures() const;

  Json to_json() const;
  std::string dump() const;
};

}  // namespace pretopos
