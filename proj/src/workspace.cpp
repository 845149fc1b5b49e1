#include "pretopos/workspace.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

#include "pretopos/classifiers.hpp"
#include "pretopos/colimits.hpp"
#include "pretopos/lcc.hpp"
#include "pretopos/smallmaps.hpp"
#include "pretopos/suites.hpp"

namespace pretopos {

SourceError::SourceError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

void Workspace::define(const std::string& name, Binding value) {
  if (contains(name)) throw Error(ErrorKind::DuplicateName, "'" + name + "' is already defined");
  bindings_.emplace(name, std::move(value));
  order_.push_back(name);
}

const Binding& Workspace::at(const std::string& name) const {
  auto it = bindings_.find(name);
  if (it == bindings_.end()) throw Error(ErrorKind::UnknownBinding, "no binding named '" + name + "'");
  return it->second;
}

namespace {

template <class T>
const T& typed(const Workspace& w, const std::string& name, const char* sort) {
  const auto* v = std::get_if<T>(&w.at(name));
  if (!v) throw Error(ErrorKind::ValidationError, "'" + name + "' is not a " + sort);
  return *v;
}

}  // namespace

const FinSet& Workspace::set(const std::string& name) const { return typed<FinSet>(*this, name, "set"); }
const FinMap& Workspace::map(const std::string& name) const { return typed<FinMap>(*this, name, "map"); }
const Relation& Workspace::relation(const std::string& name) const {
  return typed<Relation>(*this, name, "relation");
}
const Setoid& Workspace::setoid(const std::string& name) const {
  return typed<SetoidBinding>(*this, name, "setoid").setoid;
}
const Square& Workspace::square(const std::string& name) const {
  return typed<SquareBinding>(*this, name, "square").square;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Token {
  enum Kind { Ident, Number, Symbol, End } kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      Token t{Token::Ident, {}, line, col};
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Token::Number, {}, line, col};
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t.text += src[i];
        advance();
      }
      out.push_back(std::move(t));
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Token::Symbol, "->", line, col});
      advance();
      advance();
    } else if (std::string_view("=;:[]{}(),").find(c) != std::string_view::npos) {
      out.push_back({Token::Symbol, std::string(1, c), line, col});
      advance();
    } else {
      throw SourceError(ErrorKind::ParseError, line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "end of input", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  Workspace run() {
    Workspace w;
    while (peek().kind != Token::End) statement(w);
    return w;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] static void error(ErrorKind kind, const Token& at, const std::string& message) {
    throw SourceError(kind, at.line, at.column, message);
  }

  const Token& expect(const std::string& symbol) {
    const Token& t = next();
    if (t.kind != Token::Symbol || t.text != symbol)
      error(ErrorKind::ParseError, t, "expected '" + symbol + "' but found '" + t.text + "'");
    return t;
  }

  bool accept(const std::string& symbol) {
    if (peek().kind == Token::Symbol && peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& ident() {
    const Token& t = next();
    if (t.kind != Token::Ident) error(ErrorKind::ParseError, t, "expected a name but found '" + t.text + "'");
    return t;
  }

  std::pair<Index, const Token*> number() {
    const Token& t = next();
    if (t.kind != Token::Number) error(ErrorKind::ParseError, t, "expected a number but found '" + t.text + "'");
    Index v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) error(ErrorKind::ParseError, t, "number out of range");
    return {v, &t};
  }

  template <class T>
  const T& lookup(const Workspace& w, const Token& name, const char* sort) {
    if (!w.contains(name.text)) error(ErrorKind::ValidationError, name, "unknown " + std::string(sort) + " '" + name.text + "'");
    const auto* v = std::get_if<T>(&w.at(name.text));
    if (!v) error(ErrorKind::ValidationError, name, "'" + name.text + "' is not a " + sort);
    return *v;
  }

  void bind(Workspace& w, const Token& name, Binding value) {
    if (w.contains(name.text)) error(ErrorKind::DuplicateName, name, "'" + name.text + "' is already defined");
    w.define(name.text, std::move(value));
  }

  void statement(Workspace& w) {
    const Token& kw = ident();
    if (kw.text == "set") {
      const Token& name = ident();
      expect("=");
      const auto [n, at] = number();
      expect(";");
      bind(w, name, FinSet(n, name.text));
    } else if (kw.text == "map") {
      const Token& name = ident();
      expect(":");
      const FinSet& a = lookup<FinSet>(w, ident(), "set");
      expect("->");
      const FinSet& b = lookup<FinSet>(w, ident(), "set");
      expect("=");
      const Token& open = expect("[");
      std::vector<Index> table;
      if (!accept("]")) {
        do {
          const auto [v, at] = number();
          if (v >= b.size())
            error(ErrorKind::ValidationError, *at,
                  "entry " + std::to_string(v) + " is out of range for a codomain of size " + std::to_string(b.size()));
          table.push_back(v);
        } while (accept(","));
        expect("]");
      }
      if (table.size() != a.size())
        error(ErrorKind::ValidationError, open,
              "table has " + std::to_string(table.size()) + " entries for a domain of size " + std::to_string(a.size()));
      expect(";");
      bind(w, name, FinMap(a, b, std::move(table)));
    } else if (kw.text == "rel") {
      const Token& name = ident();
      const Token& on = ident();
      if (on.text != "on") error(ErrorKind::ParseError, on, "expected 'on' but found '" + on.text + "'");
      const FinSet& a = lookup<FinSet>(w, ident(), "set");
      expect("=");
      expect("{");
      std::vector<std::pair<Index, Index>> pairs;
      if (!accept("}")) {
        do {
          const Token& open = expect("(");
          const auto [i, at_i] = number();
          expect(",");
          const auto [j, at_j] = number();
          expect(")");
          if (i >= a.size() || j >= a.size())
            error(ErrorKind::ValidationError, open, "pair is out of range for a carrier of size " + std::to_string(a.size()));
          pairs.emplace_back(i, j);
        } while (accept(","));
        expect("}");
      }
      expect(";");
      bind(w, name, make_relation(a, pairs));
    } else if (kw.text == "setoid") {
      const Token& name = ident();
      expect("=");
      expect("(");
      const Token& set_name = ident();
      const FinSet& a = lookup<FinSet>(w, set_name, "set");
      expect(",");
      const Token& rel_name = ident();
      const Relation& r = lookup<Relation>(w, rel_name, "relation");
      expect(")");
      expect(";");
      if (r.base.name() != a.name())
        error(ErrorKind::ValidationError, rel_name, "'" + rel_name.text + "' is not a relation on '" + set_name.text + "'");
      Setoid s;
      try {
        s = make_setoid(r);
      } catch (const Error& e) {
        error(ErrorKind::ValidationError, rel_name, e.what());
      }
      bind(w, name, SetoidBinding{set_name.text, rel_name.text, std::move(s)});
    } else if (kw.text == "square") {
      const Token& name = ident();
      expect("=");
      expect("(");
      std::vector<const Token*> sides;
      std::vector<FinMap> maps;
      for (int k = 0; k < 4; ++k) {
        if (k > 0) expect(",");
        sides.push_back(&ident());
        maps.push_back(lookup<FinMap>(w, *sides.back(), "map"));
      }
      expect(")");
      expect(";");
      Square sq;
      try {
        sq = make_square(maps[0], maps[1], maps[2], maps[3]);
      } catch (const Error& e) {
        error(ErrorKind::ValidationError, name, e.what());
      }
      bind(w, name, SquareBinding{sides[0]->text, sides[1]->text, sides[2]->text, sides[3]->text, std::move(sq)});
    } else {
      error(ErrorKind::ParseError, kw, "unknown statement '" + kw.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<Index>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

Workspace parse(std::string_view source) { return Parser(source).run(); }

std::string render(const Workspace& w) {
  std::ostringstream out;
  for (const auto& name : w.names()) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FinSet>) {
            out << "set " << name << " = " << v.size() << ";\n";
          } else if constexpr (std::is_same_v<T, FinMap>) {
            out << "map " << name << " : " << v.dom().name() << " -> " << v.cod().name() << " = ["
                << join(v.table()) << "];\n";
          } else if constexpr (std::is_same_v<T, Relation>) {
            out << "rel " << name << " on " << v.base.name() << " = {";
            bool first = true;
            for (Index i = 0; i < v.base.size(); ++i)
              for (Index j = 0; j < v.base.size(); ++j)
                if (v(i, j)) {
                  out << (first ? "" : ", ") << "(" << i << ", " << j << ")";
                  first = false;
                }
            out << "};\n";
          } else if constexpr (std::is_same_v<T, SetoidBinding>) {
            out << "setoid " << name << " = (" << v.set << ", " << v.relation << ");\n";
          } else {
            out << "square " << name << " = (" << v.top << ", " << v.right << ", " << v.bottom << ", "
                << v.left << ");\n";
          }
        },
        w.at(name));
  }
  return out.str();
}

// --------------------------------------------------------------- commands

namespace {

struct Args {
  std::string verb;
  std::string what;
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;

  std::uint64_t option(const std::string& key, std::uint64_t fallback) const {
    auto it = options.find(key);
    if (it == options.end()) return fallback;
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
    if (ec != std::errc() || p != it->second.data() + it->second.size())
      throw Error(ErrorKind::UnknownCommand, "--" + key + " expects a non-negative integer");
    return v;
  }
};

Args split(std::string_view command) {
  std::istringstream in{std::string(command)};
  std::vector<std::string> words;
  for (std::string word; in >> word;) words.push_back(word);
  if (words.size() < 2) throw Error(ErrorKind::UnknownCommand, "expected 'construct WHAT ...' or 'verify WHAT ...'");
  Args a{words[0], words[1], {}, {}};
  for (std::size_t i = 2; i < words.size(); ++i) {
    if (words[i].rfind("--", 0) == 0) {
      if (i + 1 >= words.size()) throw Error(ErrorKind::UnknownCommand, words[i] + " needs a value");
      a.options[words[i].substr(2)] = words[i + 1];
      ++i;
    } else {
      a.positional.push_back(words[i]);
    }
  }
  return a;
}

struct Command {
  std::size_t arity;
  std::string usage;
  std::function<Certificate(const Workspace&, const Args&)> run;
};

Certificate built(const std::string& what, const Args& a, Json witnesses) {
  Certificate c("construct." + what);
  c.inputs["arguments"] = a.positional;
  c.witnesses = std::move(witnesses);
  return c;
}

Certificate tagged(Certificate c, const Args& a) {
  c.inputs["arguments"] = a.positional;
  return c;
}

const std::map<std::string, Command>& constructions() {
  static const std::map<std::string, Command> table = {
      {"product", {2, "construct product A B", [](const Workspace& w, const Args& a) {
         const Product p = product(w.set(a.positional[0]), w.set(a.positional[1]));
         return built("product", a, {{"object", to_json(p.object)}, {"p1", to_json(p.p1)}, {"p2", to_json(p.p2)}});
       }}},
      {"pullback", {2, "construct pullback f g", [](const Workspace& w, const Args& a) {
         const Pullback p = pullback(make_cospan(w.map(a.positional[0]), w.map(a.positional[1])));
         return built("pullback", a, {{"object", to_json(p.object)}, {"p1", to_json(p.p1)}, {"p2", to_json(p.p2)}});
       }}},
      {"kernel", {1, "construct kernel f", [](const Workspace& w, const Args& a) {
         const Pullback p = kernel_pair(w.map(a.positional[0]));
         return built("kernel", a, {{"object", to_json(p.object)}, {"p1", to_json(p.p1)}, {"p2", to_json(p.p2)}});
       }}},
      {"equalizer", {2, "construct equalizer f g", [](const Workspace& w, const Args& a) {
         const Equalizer e = equalizer(w.map(a.positional[0]), w.map(a.positional[1]));
         return built("equalizer", a, {{"object", to_json(e.object)}, {"inclusion", to_json(e.inclusion)}});
       }}},
      {"sum", {2, "construct sum A B", [](const Workspace& w, const Args& a) {
         const SumObject s = sum(w.set(a.positional[0]), w.set(a.positional[1]));
         return built("sum", a, {{"object", to_json(s.object)}, {"inl", to_json(s.inl)}, {"inr", to_json(s.inr)}});
       }}},
      {"coeq", {2, "construct coeq f g", [](const Workspace& w, const Args& a) {
         const CoeqObject q = coequalizer(w.map(a.positional[0]), w.map(a.positional[1]));
         return built("coeq", a, {{"object", to_json(q.object)}, {"proj", to_json(q.proj)}, {"class_reps", q.class_reps}});
       }}},
      {"pushout", {2, "construct pushout f g", [](const Workspace& w, const Args& a) {
         const Pushout p = pushout(w.map(a.positional[0]), w.map(a.positional[1]));
         return built("pushout", a, {{"object", to_json(p.object)}, {"inl", to_json(p.inl)}, {"inr", to_json(p.inr)}});
       }}},
      {"cone", {1, "construct cone f", [](const Workspace& w, const Args& a) {
         const MappingCone c = mapping_cone(w.map(a.positional[0]));
         return built("cone", a, {{"object", to_json(c.object)}, {"components", c.components}});
       }}},
      {"image", {1, "construct image f", [](const Workspace& w, const Args& a) {
         const ImageFactorization im = image_factorization(w.map(a.positional[0]));
         return built("image", a, {{"image", to_json(im.image)}, {"surj", to_json(im.surj)}, {"inj", to_json(im.inj)}});
       }}},
      {"truncation", {1, "construct truncation A", [](const Workspace& w, const Args& a) {
         return built("truncation", a, {{"map", to_json(truncation_map(w.set(a.positional[0])))}});
       }}},
      {"closure", {1, "construct closure R", [](const Workspace& w, const Args& a) {
         return built("closure", a, {{"closure", to_json(rst_closure(w.relation(a.positional[0])).matrix)}});
       }}},
      {"quotient", {1, "construct quotient S", [](const Workspace& w, const Args& a) {
         const Quotient q = quotient(w.setoid(a.positional[0]));
         return built("quotient", a, {{"object", to_json(q.object)}, {"proj", to_json(q.proj)}, {"reps", q.reps}});
       }}},
      {"vv", {1, "construct vv S", [](const Workspace& w, const Args& a) {
         const VVQuotient v = vv_quotient(w.setoid(a.positional[0]));
         return built("vv", a, {{"object", to_json(v.object)}, {"comparison", to_json(v.comparison)},
                                {"comparison_is_iso", v.comparison_is_iso}});
       }}},
      {"exp", {2, "construct exp A B", [](const Workspace& w, const Args& a) {
         const Exponential e = exponential(w.set(a.positional[0]), w.set(a.positional[1]), w.cap);
         return built("exp", a, {{"object", to_json(e.object)}, {"eval", to_json(e.eval)}});
       }}},
      {"pi", {2, "construct pi f h   (h a map into dom f)", [](const Workspace& w, const Args& a) {
         const PiObject p = pi_f(w.map(a.positional[0]), make_slice(w.map(a.positional[1])), w.cap);
         return built("pi", a, {{"total", to_json(p.slice.total)}, {"proj", to_json(p.slice.proj)}});
       }}},
      {"wtype", {1, "construct wtype f [--size-cap N] [--stage-cap N]", [](const Workspace& w, const Args& a) {
         const WResult r = w_type(w.map(a.positional[0]), a.option("size-cap", kDefaultWSizeCap),
                                  a.option("stage-cap", kDefaultWStageCap));
         Certificate c = built("wtype", a, to_json(r));
         c.caps = {{"size_cap", a.option("size-cap", kDefaultWSizeCap)},
                   {"stage_cap", a.option("stage-cap", kDefaultWStageCap)}};
         return c;
       }}},
      {"classify", {1, "construct classify f --bound N", [](const Workspace& w, const Args& a) {
         const ObjectClassifier oc = object_classifier(a.option("bound", 3));
         const Classification c = classify(w.map(a.positional[0]), oc);
         Certificate cert = built("classify", a, {{"chi", to_json(c.chi)}, {"theta", to_json(c.theta)},
                                                  {"model", "skeletal model: one cardinality per element of U"}});
         cert.caps["bound"] = oc.bound;
         return cert;
       }}},
      {"char", {1, "construct char m   (m a mono)", [](const Workspace& w, const Args& a) {
         return built("char", a, {{"chi", to_json(char_of_mono(make_subobject(w.map(a.positional[0]))))}});
       }}},
  };
  return table;
}

const std::map<std::string, Command>& verifications() {
  static const std::map<std::string, Command> table = {
      {"pullback-square", {1, "verify pullback-square q", [](const Workspace& w, const Args& a) {
         return tagged(verify_pullback_square(w.square(a.positional[0])), a);
       }}},
      {"sum-disjoint", {2, "verify sum-disjoint A B", [](const Workspace& w, const Args& a) {
         return tagged(verify_sum_disjoint(sum(w.set(a.positional[0]), w.set(a.positional[1]))), a);
       }}},
      {"sum-stability", {3, "verify sum-stability f0 f1 g", [](const Workspace& w, const Args& a) {
         return tagged(verify_sum_stability(w.map(a.positional[0]), w.map(a.positional[1]), w.map(a.positional[2])), a);
       }}},
      {"coeq-universal", {2, "verify coeq-universal f g [--max-codomain N]", [](const Workspace& w, const Args& a) {
         const FinMap& f = w.map(a.positional[0]);
         const FinMap& g = w.map(a.positional[1]);
         return tagged(verify_coeq_universal(f, g, coequalizer(f, g), a.option("max-codomain", 3), w.cap), a);
       }}},
      {"epi", {1, "verify epi f", [](const Workspace& w, const Args& a) {
         return tagged(verify_epi_surjective_cone_equivalence(w.map(a.positional[0]), w.cap), a);
       }}},
      {"cover", {1, "verify cover f", [](const Workspace& w, const Args& a) {
         return tagged(is_cover(w.map(a.positional[0]), w.cap), a);
       }}},
      {"regular-epi", {1, "verify regular-epi f", [](const Workspace& w, const Args& a) {
         return tagged(verify_surj_is_regular_epi(w.map(a.positional[0]), w.cap), a);
       }}},
      {"pullback-of-surjection", {2, "verify pullback-of-surjection p g", [](const Workspace& w, const Args& a) {
         return tagged(verify_pullback_of_surjection(make_cospan(w.map(a.positional[0]), w.map(a.positional[1]))), a);
       }}},
      {"equivalence", {1, "verify equivalence R", [](const Workspace& w, const Args& a) {
         return tagged(is_equivalence_relation(w.relation(a.positional[0])), a);
       }}},
      {"effectiveness", {1, "verify effectiveness S", [](const Workspace& w, const Args& a) {
         return tagged(verify_effectiveness(w.setoid(a.positional[0])), a);
       }}},
      {"kernel-effective", {1, "verify kernel-effective f", [](const Workspace& w, const Args& a) {
         return tagged(verify_kernel_effective(w.map(a.positional[0])), a);
       }}},
      {"adjunction-q-i", {2, "verify adjunction-q-i S A", [](const Workspace& w, const Args& a) {
         return tagged(verify_adjunction_q_i(w.setoid(a.positional[0]), w.set(a.positional[1]), w.cap), a);
       }}},
      {"pi-adjunction", {3, "verify pi-adjunction f g h", [](const Workspace& w, const Args& a) {
         return tagged(verify_pi_adjunction(w.map(a.positional[0]), make_slice(w.map(a.positional[1])),
                                            make_slice(w.map(a.positional[2])), w.cap),
                       a);
       }}},
      {"initiality", {1, "verify initiality f [--max-carrier N]", [](const Workspace& w, const Args& a) {
         const WResult r = w_type(w.map(a.positional[0]));
         if (r.status != WStatus::Finite) {
           Certificate c("lcc.initiality");
           c.inputs["shape"] = to_json(r.shape);
           c.fail("chain did not converge", to_json(r));
           return tagged(std::move(c), a);
         }
         return tagged(verify_initiality(r, a.option("max-carrier", 4), w.cap), a);
       }}},
      {"subobject-classifier", {1, "verify subobject-classifier B", [](const Workspace& w, const Args& a) {
         return tagged(verify_subobject_classifier(w.set(a.positional[0]), w.cap), a);
       }}},
      {"object-classifier", {1, "verify object-classifier f --bound N", [](const Workspace& w, const Args& a) {
         return tagged(verify_object_classifier_pullback(w.map(a.positional[0]), object_classifier(a.option("bound", 3))), a);
       }}},
      {"families", {1, "verify families B --bound N", [](const Workspace& w, const Args& a) {
         return tagged(verify_family_equivalence(w.set(a.positional[0]), object_classifier(a.option("bound", 3)), w.cap), a);
       }}},
      {"quasi-pullback", {1, "verify quasi-pullback q", [](const Workspace& w, const Args& a) {
         return tagged(is_quasi_pullback(w.square(a.positional[0])), a);
       }}},
      {"covering-square", {1, "verify covering-square q", [](const Workspace& w, const Args& a) {
         return tagged(is_covering_square(w.square(a.positional[0])), a);
       }}},
      {"collection-square", {1, "verify collection-square q [--e-bound N]", [](const Workspace& w, const Args& a) {
         return tagged(is_collection_square(make_covering_square(w.square(a.positional[0])), a.option("e-bound", 4), w.cap), a);
       }}},
      {"amc", {1, "verify amc f [--e-bound N]", [](const Workspace& w, const Args& a) {
         return tagged(amc_witness(w.map(a.positional[0]), a.option("e-bound", 4), w.cap).certificate, a);
       }}},
      {"collection-axiom", {2, "verify collection-axiom f p --k K", [](const Workspace& w, const Args& a) {
         return tagged(collection_axiom_witness(fiber_bound_class(a.option("k", 2)), w.map(a.positional[0]),
                                                w.map(a.positional[1])).certificate,
                       a);
       }}},
      {"stable", {0, "verify stable --k K [--max-size N]", [](const Workspace& w, const Args& a) {
         return verify_stable(fiber_bound_class(a.option("k", 2)), a.option("max-size", 3), w.cap);
       }}},
      {"locally-full", {0, "verify locally-full --k K [--max-size N]", [](const Workspace& w, const Args& a) {
         return verify_locally_full(fiber_bound_class(a.option("k", 2)), a.option("max-size", 3), w.cap);
       }}},
      {"lextensive", {0, "verify lextensive [--max-size N]", [](const Workspace& w, const Args& a) {
         return suite_lextensive(a.option("max-size", 3), w.cap);
       }}},
      {"regular", {0, "verify regular [--max-size N]", [](const Workspace& w, const Args& a) {
         return suite_regular(a.option("max-size", 3), w.cap);
       }}},
      {"exact", {0, "verify exact [--max-size N]", [](const Workspace& w, const Args& a) {
         return suite_exact(a.option("max-size", 3), w.cap);
       }}},
      {"lcc", {0, "verify lcc [--max-size N]", [](const Workspace& w, const Args& a) {
         return suite_lcc(a.option("max-size", 3), w.cap);
       }}},
      {"w-types", {0, "verify w-types [--max-size N] [--max-carrier N]", [](const Workspace& w, const Args& a) {
         return suite_wtypes(a.option("max-size", 3), a.option("max-carrier", 4), w.cap);
       }}},
      {"epis", {0, "verify epis [--max-size N]", [](const Workspace& w, const Args& a) {
         return suite_epi(a.option("max-size", 3), w.cap);
       }}},
      {"classifiers", {0, "verify classifiers [--max-size N]", [](const Workspace& w, const Args& a) {
         return suite_classifiers(a.option("max-size", 3), w.cap);
       }}},
      {"small-maps", {0, "verify small-maps [--max-size N]", [](const Workspace& w, const Args& a) {
         return suite_smallmaps(a.option("max-size", 3), w.cap);
       }}},
      {"piw-pretopos", {0, "verify piw-pretopos [--max-size N] [--seed S]", [](const Workspace& w, const Args& a) {
         std::optional<std::uint64_t> seed = w.seed;
         if (a.options.count("seed")) seed = a.option("seed", 0);
         return verify_piw_pretopos(a.option("max-size", 3), seed, w.cap);
       }}},
  };
  return table;
}

}  // namespace

Certificate run_command(const Workspace& w, std::string_view command) {
  const Args a = split(command);
  const std::map<std::string, Command>* table = nullptr;
  if (a.verb == "construct") table = &constructions();
  else if (a.verb == "verify") table = &verifications();
  else throw Error(ErrorKind::UnknownCommand, "unknown verb '" + a.verb + "'");
  auto it = table->find(a.what);
  if (it == table->end()) {
    std::string known;
    for (const auto& [name, cmd] : *table) known += (known.empty() ? "" : ", ") + name;
    throw Error(ErrorKind::UnknownCommand, "unknown command '" + a.verb + " " + a.what + "'; known: " + known);
  }
  if (a.positional.size() != it->second.arity)
    throw Error(ErrorKind::UnknownCommand, "usage: " + it->second.usage);
  return it->second.run(w, a);
}

}  // namespace pretopos
