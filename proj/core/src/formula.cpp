#include "ifl/formula.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace ifl {

struct Formula::Node {
  NodeKind kind;
  // RelAtom
  std::string rel_name;
  std::vector<std::string> rel_args;
  // EqAtom
  std::string eq_left, eq_right;
  // Quant
  QuantKind quant_kind = QuantKind::Exists;
  std::string quant_var;
  std::set<std::string> slash;
  // children: NegAtom/Quant use [0], And/Or use [0] and [1]
  std::vector<Formula> children;
};

Formula Formula::rel(std::string name, std::vector<std::string> args) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::RelAtom;
  n->rel_name = std::move(name);
  n->rel_args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::eq(std::string left, std::string right) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::EqAtom;
  n->eq_left = std::move(left);
  n->eq_right = std::move(right);
  return Formula(std::move(n));
}

Formula Formula::neg(const Formula& atom) {
  if (atom.kind() != NodeKind::RelAtom && atom.kind() != NodeKind::EqAtom)
    throw Error(ErrorCode::ParseError, "negation applies to atoms only");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::NegAtom;
  n->children = {atom};
  return Formula(std::move(n));
}

Formula Formula::conj(const Formula& lhs, const Formula& rhs) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::And;
  n->children = {lhs, rhs};
  return Formula(std::move(n));
}

Formula Formula::disj(const Formula& lhs, const Formula& rhs) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Or;
  n->children = {lhs, rhs};
  return Formula(std::move(n));
}

Formula Formula::quant(QuantKind kind, std::string var,
                       std::set<std::string> slash, const Formula& body) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Quant;
  n->quant_kind = kind;
  n->quant_var = std::move(var);
  n->slash = std::move(slash);
  n->children = {body};
  return Formula(std::move(n));
}

NodeKind Formula::kind() const { return node_->kind; }

bool Formula::is_atom() const {
  NodeKind k = kind();
  return k == NodeKind::RelAtom || k == NodeKind::EqAtom ||
         k == NodeKind::NegAtom;
}

const std::string& Formula::rel_name() const {
  assert(kind() == NodeKind::RelAtom);
  return node_->rel_name;
}
const std::vector<std::string>& Formula::rel_args() const {
  assert(kind() == NodeKind::RelAtom);
  return node_->rel_args;
}
const std::string& Formula::eq_left() const {
  assert(kind() == NodeKind::EqAtom);
  return node_->eq_left;
}
const std::string& Formula::eq_right() const {
  assert(kind() == NodeKind::EqAtom);
  return node_->eq_right;
}
Formula Formula::neg_inner() const {
  assert(kind() == NodeKind::NegAtom);
  return node_->children[0];
}
Formula Formula::lhs() const {
  assert(kind() == NodeKind::And || kind() == NodeKind::Or);
  return node_->children[0];
}
Formula Formula::rhs() const {
  assert(kind() == NodeKind::And || kind() == NodeKind::Or);
  return node_->children[1];
}
QuantKind Formula::quant_kind() const {
  assert(kind() == NodeKind::Quant);
  return node_->quant_kind;
}
const std::string& Formula::quant_var() const {
  assert(kind() == NodeKind::Quant);
  return node_->quant_var;
}
const std::set<std::string>& Formula::slash() const {
  assert(kind() == NodeKind::Quant);
  return node_->slash;
}
Formula Formula::body() const {
  assert(kind() == NodeKind::Quant);
  return node_->children[0];
}

int Formula::child_count() const { return (int)node_->children.size(); }

Formula Formula::child(int index) const {
  assert(index >= 0 && index < child_count());
  return node_->children[index];
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case NodeKind::RelAtom:
      return rel_name() == other.rel_name() && rel_args() == other.rel_args();
    case NodeKind::EqAtom:
      return eq_left() == other.eq_left() && eq_right() == other.eq_right();
    case NodeKind::NegAtom:
      return neg_inner() == other.neg_inner();
    case NodeKind::And:
    case NodeKind::Or:
      return lhs() == other.lhs() && rhs() == other.rhs();
    case NodeKind::Quant:
      return quant_kind() == other.quant_kind() &&
             quant_var() == other.quant_var() && slash() == other.slash() &&
             body() == other.body();
  }
  return false;
}

Formula subformula_at(const Formula& f, const NodePath& path) {
  Formula cur = f;
  for (int step : path) {
    if (step < 0 || step >= cur.child_count())
      throw Error(ErrorCode::InvalidPair, "path does not address a node");
    cur = cur.child(step);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Printing.  The output is canonical: slash sets sorted, connectives grouped
// left-associatively, quantifier chains unparenthesized, every other
// quantifier position and every connective wrapped in parentheses.

namespace {

void print_slash(const std::set<std::string>& slash, std::ostream& os) {
  if (slash.empty()) return;
  os << "/{";
  bool first = true;
  for (const auto& v : slash) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
}

void print_atom(const Formula& f, std::ostream& os) {
  switch (f.kind()) {
    case NodeKind::EqAtom:
      os << f.eq_left() << "=" << f.eq_right();
      return;
    case NodeKind::RelAtom: {
      os << f.rel_name() << "(";
      bool first = true;
      for (const auto& a : f.rel_args()) {
        if (!first) os << ",";
        os << a;
        first = false;
      }
      os << ")";
      return;
    }
    case NodeKind::NegAtom:
      os << "~";
      print_atom(f.neg_inner(), os);
      return;
    default:
      assert(false);
  }
}

void print_formula_rec(const Formula& f, std::ostream& os);

// unit level: atoms bare, everything else parenthesized
void print_unit(const Formula& f, std::ostream& os) {
  if (f.is_atom()) {
    print_atom(f, os);
  } else {
    os << "(";
    if (f.kind() == NodeKind::Quant)
      print_formula_rec(f, os);
    else
      print_formula_rec(f, os);  // connectives print bare inside their parens
    os << ")";
  }
}

void print_conj(const Formula& f, std::ostream& os) {
  if (f.kind() == NodeKind::And) {
    print_conj(f.lhs(), os);
    os << " & ";
    print_unit(f.rhs(), os);
  } else {
    print_unit(f, os);
  }
}

void print_disj(const Formula& f, std::ostream& os) {
  if (f.kind() == NodeKind::Or) {
    print_disj(f.lhs(), os);
    os << " | ";
    print_conj(f.rhs(), os);
  } else {
    print_conj(f, os);
  }
}

void print_formula_rec(const Formula& f, std::ostream& os) {
  switch (f.kind()) {
    case NodeKind::Quant: {
      os << (f.quant_kind() == QuantKind::Exists ? "E " : "A ");
      os << f.quant_var();
      print_slash(f.slash(), os);
      os << " ";
      Formula b = f.body();
      if (b.kind() == NodeKind::Quant) {
        print_formula_rec(b, os);
      } else {
        os << "(";
        print_formula_rec(b, os);
        os << ")";
      }
      return;
    }
    case NodeKind::And:
    case NodeKind::Or:
      print_disj(f, os);
      return;
    default:
      print_atom(f, os);
      return;
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  if (f.kind() == NodeKind::And || f.kind() == NodeKind::Or) {
    os << "(";
    print_formula_rec(f, os);
    os << ")";
  } else {
    print_formula_rec(f, os);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Free variables, per the recursive definition: atoms contribute their
// variables, quantifiers remove the bound variable and add the slash set.

std::set<std::string> free_variables(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::RelAtom:
      return {f.rel_args().begin(), f.rel_args().end()};
    case NodeKind::EqAtom:
      return {f.eq_left(), f.eq_right()};
    case NodeKind::NegAtom:
      return free_variables(f.neg_inner());
    case NodeKind::And:
    case NodeKind::Or: {
      auto fv = free_variables(f.lhs());
      auto rv = free_variables(f.rhs());
      fv.insert(rv.begin(), rv.end());
      return fv;
    }
    case NodeKind::Quant: {
      auto fv = free_variables(f.body());
      fv.erase(f.quant_var());
      fv.insert(f.slash().begin(), f.slash().end());
      return fv;
    }
  }
  return {};
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

// ---------------------------------------------------------------------------
// Regularity

namespace {

void check_regular_rec(const Formula& f, std::set<std::string>& above,
                       NodePath& path, RegularityReport& report) {
  if (f.kind() == NodeKind::Quant) {
    for (const auto& v : f.slash()) {
      if (!above.count(v)) {
        report.violations.push_back(
            {RegularityViolation::Kind::SlashUnbound, v, path,
             "slashed variable '" + v + "' is not quantified above"});
      }
    }
    bool requant = above.count(f.quant_var()) > 0;
    if (requant) {
      report.violations.push_back(
          {RegularityViolation::Kind::RequantifiedBelow, f.quant_var(), path,
           "variable '" + f.quant_var() +
               "' re-quantified below its own quantifier"});
    }
    bool inserted = !requant;
    if (inserted) above.insert(f.quant_var());
    path.push_back(0);
    check_regular_rec(f.body(), above, path, report);
    path.pop_back();
    if (inserted) above.erase(f.quant_var());
    return;
  }
  for (int i = 0; i < f.child_count(); ++i) {
    path.push_back(i);
    check_regular_rec(f.child(i), above, path, report);
    path.pop_back();
  }
}

}  // namespace

RegularityReport check_regular(const Formula& f) {
  RegularityReport report;
  std::set<std::string> above;
  NodePath path;
  check_regular_rec(f, above, path, report);
  // The standing convention: each variable quantified at most once anywhere,
  // including parallel branches.
  std::map<std::string, int> counts;
  for (const auto& q : collect_quantifiers(f)) {
    if (++counts[q.var] == 2) {
      report.violations.push_back(
          {RegularityViolation::Kind::DuplicateQuantifier, q.var, q.path,
           "variable '" + q.var + "' quantified more than once"});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

PrefixSplit quantifier_prefix(const Formula& f) {
  std::vector<PrefixEntry> prefix;
  Formula cur = f;
  while (cur.kind() == NodeKind::Quant) {
    prefix.push_back({cur.quant_kind(), cur.quant_var(), cur.slash()});
    cur = cur.body();
  }
  return {std::move(prefix), cur};
}

bool is_quantifier_free(const Formula& f) {
  if (f.kind() == NodeKind::Quant) return false;
  for (int i = 0; i < f.child_count(); ++i)
    if (!is_quantifier_free(f.child(i))) return false;
  return true;
}

bool is_prenex(const Formula& f) {
  return is_quantifier_free(quantifier_prefix(f).matrix);
}

Formula prefix_to_formula(const std::vector<PrefixEntry>& prefix,
                          const Formula& matrix) {
  Formula result = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    result = Formula::quant(it->kind, it->var, it->slash, result);
  return result;
}

namespace {

void collect_quantifiers_rec(const Formula& f, NodePath& path,
                             std::vector<QuantOccurrence>& out) {
  if (f.kind() == NodeKind::Quant)
    out.push_back({path, f.quant_kind(), f.quant_var(), f.slash()});
  for (int i = 0; i < f.child_count(); ++i) {
    path.push_back(i);
    collect_quantifiers_rec(f.child(i), path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<QuantOccurrence> collect_quantifiers(const Formula& f) {
  std::vector<QuantOccurrence> out;
  NodePath path;
  collect_quantifiers_rec(f, path, out);
  return out;
}

// ---------------------------------------------------------------------------
// Slash surgery

namespace {

bool is_strict_prefix(const NodePath& a, const NodePath& b) {
  if (a.size() >= b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

Formula rebuild_with_slash(const Formula& f, const NodePath& target,
                           size_t depth, const std::set<std::string>& slash) {
  if (depth == target.size()) {
    return Formula::quant(f.quant_kind(), f.quant_var(), slash, f.body());
  }
  int step = target[depth];
  Formula replaced = rebuild_with_slash(f.child(step), target, depth + 1, slash);
  switch (f.kind()) {
    case NodeKind::Quant:
      return Formula::quant(f.quant_kind(), f.quant_var(), f.slash(), replaced);
    case NodeKind::And:
      return step == 0 ? Formula::conj(replaced, f.rhs())
                       : Formula::conj(f.lhs(), replaced);
    case NodeKind::Or:
      return step == 0 ? Formula::disj(replaced, f.rhs())
                       : Formula::disj(f.lhs(), replaced);
    default:
      throw Error(ErrorCode::InvalidPair, "path passes through an atom");
  }
}

}  // namespace

namespace detail {

Formula remove_slash_var(const Formula& f, const IEEPair& pair,
                         QuantKind kind) {
  Formula xq = subformula_at(f, pair.x_path);
  Formula yq = subformula_at(f, pair.y_path);
  if (xq.kind() != NodeKind::Quant || yq.kind() != NodeKind::Quant ||
      xq.quant_kind() != kind || yq.quant_kind() != kind)
    throw Error(ErrorCode::InvalidPair,
                "pair does not address two quantifiers of the required kind");
  if (!is_strict_prefix(pair.x_path, pair.y_path))
    throw Error(ErrorCode::InvalidPair,
                "first quantifier is not superordinated to the second");
  if (!yq.slash().count(xq.quant_var()))
    throw Error(ErrorCode::InvalidPair,
                "'" + xq.quant_var() + "' is not in the slash set of '" +
                    yq.quant_var() + "'");
  auto slash = yq.slash();
  slash.erase(xq.quant_var());
  return rebuild_with_slash(f, pair.y_path, 0, slash);
}

}  // namespace detail

Formula remove_independence(const Formula& f, const IEEPair& pair) {
  return detail::remove_slash_var(f, pair, QuantKind::Exists);
}

}  // namespace ifl
