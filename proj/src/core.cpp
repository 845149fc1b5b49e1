#include "pretopos/core.hpp"

#include <algorithm>
#include <limits>

namespace pretopos {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParallelMismatch: return "ParallelMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::NotUnique: return "NotUnique";
    case ErrorKind::NotEquivalenceRelation: return "NotEquivalenceRelation";
    case ErrorKind::NotPreserving: return "NotPreserving";
    case ErrorKind::NotMono: return "NotMono";
    case ErrorKind::FiberBoundExceeded: return "FiberBoundExceeded";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::UnknownBinding: return "UnknownBinding";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

FinSet::FinSet(std::size_t size, std::string name) : size_(size), name_(std::move(name)) {}

FinSet::FinSet(std::size_t size, std::vector<std::string> decoder, std::string name)
    : size_(size), name_(std::move(name)) {
  if (decoder.size() != size) {
    throw Error(ErrorKind::LengthMismatch, "decoder has " + std::to_string(decoder.size()) +
                                               " entries for a carrier of size " +
                                               std::to_string(size));
  }
  decoder_ = std::make_shared<const std::vector<std::string>>(std::move(decoder));
}

std::string FinSet::describe(Index i) const {
  if (decoder_) return (*decoder_)[i];
  return std::to_string(i);
}

FinSet FinSet::renamed(std::string name) const {
  FinSet copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool operator==(const FinSet& a, const FinSet& b) {
  if (a.size_ != b.size_) return false;
  if (a.has_decoder() != b.has_decoder()) return false;
  return !a.decoder_ || a.decoder_ == b.decoder_ || *a.decoder_ == *b.decoder_;
}

bool compatible(const FinSet& a, const FinSet& b) {
  if (a.size() != b.size()) return false;
  if (!a.has_decoder() || !b.has_decoder()) return true;
  return a.decoder() == b.decoder() || *a.decoder() == *b.decoder();
}

FinMap::FinMap(FinSet dom, FinSet cod, std::vector<Index> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) {
    throw Error(ErrorKind::LengthMismatch, "table has " + std::to_string(table_.size()) +
                                               " entries for a domain of size " +
                                               std::to_string(dom_.size()));
  }
  for (Index i = 0; i < table_.size(); ++i) {
    if (table_[i] >= cod_.size()) {
      throw Error(ErrorKind::OutOfRange, "entry " + std::to_string(i) + " = " +
                                             std::to_string(table_[i]) +
                                             " is outside a codomain of size " +
                                             std::to_string(cod_.size()));
    }
  }
}

bool operator==(const FinMap& a, const FinMap& b) {
  return a.dom_.size() == b.dom_.size() && a.cod_.size() == b.cod_.size() && a.table_ == b.table_;
}

FinSet mk_finset(std::size_t n, std::string name) { return FinSet(n, std::move(name)); }

FinMap mk_map(const FinSet& dom, const FinSet& cod, std::vector<Index> table) {
  return FinMap(dom, cod, std::move(table));
}

FinMap identity(const FinSet& a) {
  std::vector<Index> table(a.size());
  for (Index i = 0; i < a.size(); ++i) table[i] = i;
  return FinMap(a, a, std::move(table));
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!compatible(f.cod(), g.dom())) {
    throw Error(ErrorKind::CompositionMismatch,
                "codomain of size " + std::to_string(f.cod().size()) +
                    " does not match domain of size " + std::to_string(g.dom().size()));
  }
  std::vector<Index> table(f.dom().size());
  for (Index i = 0; i < table.size(); ++i) table[i] = g(f(i));
  return FinMap(f.dom(), g.cod(), std::move(table));
}

std::uint64_t hom_count(std::size_t a, std::size_t b, std::uint64_t limit) {
  const std::uint64_t over = limit == std::numeric_limits<std::uint64_t>::max() ? limit : limit + 1;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < a; ++i) {
    if (b == 0) return 0;
    if (n > over / b) return over;
    n *= b;
  }
  return std::min(n, over);
}

void require_hom_within(std::size_t a, std::size_t b, std::uint64_t cap) {
  const auto n = hom_count(a, b, cap);
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded, std::to_string(b) + "^" + std::to_string(a) +
                                            " candidate maps exceed the cap of " +
                                            std::to_string(cap));
  }
}

void for_each_table(std::size_t a, std::size_t b, std::uint64_t cap,
                    const std::function<bool(const std::vector<Index>&)>& visit) {
  require_hom_within(a, b, cap);
  if (a > 0 && b == 0) return;
  std::vector<Index> table(a, 0);
  while (true) {
    if (!visit(table)) return;
    // odometer: the last position varies fastest
    std::size_t pos = a;
    while (pos > 0) {
      --pos;
      if (++table[pos] < b) break;
      table[pos] = 0;
      if (pos == 0) return;
    }
    if (a == 0) return;
  }
}

std::uint64_t choice_count(const std::vector<std::vector<Index>>& options, std::uint64_t limit) {
  const std::uint64_t over = limit == std::numeric_limits<std::uint64_t>::max() ? limit : limit + 1;
  std::uint64_t n = 1;
  for (const auto& o : options) {
    if (o.empty()) return 0;
    if (n > over / o.size()) return over;
    n *= o.size();
  }
  return std::min(n, over);
}

void for_each_choice(const std::vector<std::vector<Index>>& options, std::uint64_t cap,
                     const std::function<bool(const std::vector<Index>&)>& visit) {
  const auto n = choice_count(options, cap);
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                "more than " + std::to_string(cap) + " choices");
  }
  if (n == 0) return;
  std::vector<Index> digit(options.size(), 0);
  std::vector<Index> pick(options.size());
  for (Index i = 0; i < options.size(); ++i) pick[i] = options[i][0];
  while (true) {
    if (!visit(pick)) return;
    std::size_t pos = options.size();
    while (true) {
      if (pos == 0) return;
      --pos;
      if (++digit[pos] < options[pos].size()) {
        pick[pos] = options[pos][digit[pos]];
        break;
      }
      digit[pos] = 0;
      pick[pos] = options[pos][0];
    }
  }
}

std::vector<FinMap> hom_enumerate(const FinSet& a, const FinSet& b, std::uint64_t cap) {
  std::vector<FinMap> out;
  for_each_table(a.size(), b.size(), cap, [&](const std::vector<Index>& t) {
    out.emplace_back(a, b, t);
    return true;
  });
  return out;
}

std::optional<FinMap> is_iso(const FinMap& f) {
  if (f.dom().size() != f.cod().size()) return std::nullopt;
  constexpr Index kUnset = std::numeric_limits<Index>::max();
  std::vector<Index> inverse(f.cod().size(), kUnset);
  for (Index i = 0; i < f.dom().size(); ++i) {
    if (inverse[f(i)] != kUnset) return std::nullopt;
    inverse[f(i)] = i;
  }
  return FinMap(f.cod(), f.dom(), std::move(inverse));
}

bool is_mono(const FinMap& f) {
  std::vector<bool> seen(f.cod().size(), false);
  for (Index v : f.table()) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_surjective(const FinMap& f) {
  std::vector<bool> hit(f.cod().size(), false);
  std::size_t count = 0;
  for (Index v : f.table()) {
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  }
  return count == f.cod().size();
}

Certificate is_epi_bruteforce(const FinMap& f, std::uint64_t cap) {
  Certificate cert("epi.bruteforce");
  cert.inputs["f"] = to_json(f);
  cert.caps["hom_cap"] = cap;
  cert.caps["max_test_codomain"] = 2;
  const std::size_t a = f.dom().size();
  const std::size_t b = f.cod().size();
  for (std::size_t c = 0; c <= 2; ++c) require_hom_within(b, c, cap);

  std::uint64_t pairs = 0;
  for (std::size_t c = 0; c <= 2 && cert.passed; ++c) {
    std::vector<std::vector<Index>> tables;
    for_each_table(b, c, cap, [&](const std::vector<Index>& t) {
      tables.push_back(t);
      return true;
    });
    for (std::size_t i = 0; i < tables.size() && cert.passed; ++i) {
      for (std::size_t j = i + 1; j < tables.size(); ++j) {
        ++pairs;
        bool agree = true;
        for (Index x = 0; x < a && agree; ++x) agree = tables[i][f(x)] == tables[j][f(x)];
        if (agree) {
          cert.fail("separating pair",
                    {{"codomain", c}, {"g", tables[i]}, {"h", tables[j]}});
          break;
        }
      }
    }
  }
  cert.witnesses["pairs_checked"] = pairs;
  cert.witnesses["epi"] = cert.passed;
  return cert;
}

std::vector<Index> fiber(const FinMap& f, Index b) {
  std::vector<Index> out;
  for (Index i = 0; i < f.dom().size(); ++i)
    if (f(i) == b) out.push_back(i);
  return out;
}

std::vector<std::vector<Index>> fibers(const FinMap& f) {
  std::vector<std::vector<Index>> out(f.cod().size());
  for (Index i = 0; i < f.dom().size(); ++i) out[f(i)].push_back(i);
  return out;
}

std::size_t BoolMatrix::count() const {
  std::size_t n = 0;
  for (auto c : cells_) n += c;
  return n;
}

std::vector<bool> BoolMatrix::row(Index i) const {
  std::vector<bool> out(cols_);
  for (Index j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

Json to_json(const BoolMatrix& m) {
  Json pairs = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) pairs.push_back({i, j});
  return pairs;
}

Json to_json(const FinSet& a) {
  Json j = {{"size", a.size()}};
  if (!a.name().empty()) j["name"] = a.name();
  if (a.has_decoder()) j["decoder"] = *a.decoder();
  return j;
}

Json to_json(const FinMap& f) {
  return {{"dom", f.dom().size()}, {"cod", f.cod().size()}, {"table", f.table()}};
}

void Certificate::fail(std::string_view check, Json counterexample) {
  passed = false;
  auto& count = witnesses["failures"];
  count = count.is_number() ? count.get<std::uint64_t>() + 1 : std::uint64_t{1};
  if (!witnesses.contains("counterexample")) {
    witnesses["counterexample"] = {{"check", std::string(check)},
                                   {"detail", std::move(counterexample)}};
  }
}

std::uint64_t Certificate::failures() const {
  auto it = witnesses.find("failures");
  return it == witnesses.end() ? 0 : it->get<std::uint64_t>();
}

Json Certificate::to_json() const {
  Json j = {{"schema", kSchemaVersion}, {"kind", kind},     {"inputs", inputs},
            {"witnesses", witnesses},   {"passed", passed}, {"caps", caps}};
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

std::string Certificate::dump() const { return to_json().dump(2); }

}  // namespace pretopos
