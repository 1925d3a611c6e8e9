#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ifl/error.hpp"

namespace ifl {

enum class NodeKind { RelAtom, EqAtom, NegAtom, And, Or, Quant };
enum class QuantKind { Exists, Forall };

inline QuantKind dual(QuantKind k) {
  return k == QuantKind::Exists ? QuantKind::Forall : QuantKind::Exists;
}

/// Immutable AST of a regular IF formula in negation normal form.  Negation
/// exists only as a wrapper around atoms; there is no general negation node.
/// Values share subtrees and are cheap to copy.
class Formula {
 public:
  static Formula rel(std::string name, std::vector<std::string> args);
  static Formula eq(std::string left, std::string right);
  static Formula neg(const Formula& atom);  // atom must be RelAtom or EqAtom
  static Formula conj(const Formula& lhs, const Formula& rhs);
  static Formula disj(const Formula& lhs, const Formula& rhs);
  static Formula quant(QuantKind kind, std::string var,
                       std::set<std::string> slash, const Formula& body);

  NodeKind kind() const;
  bool is_atom() const;  // RelAtom, EqAtom or NegAtom

  const std::string& rel_name() const;
  const std::vector<std::string>& rel_args() const;
  const std::string& eq_left() const;
  const std::string& eq_right() const;
  Formula neg_inner() const;
  Formula lhs() const;
  Formula rhs() const;
  QuantKind quant_kind() const;
  const std::string& quant_var() const;
  const std::set<std::string>& slash() const;
  Formula body() const;

  int child_count() const;
  Formula child(int index) const;

  bool operator==(const Formula& other) const;  // structural equality
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Sequence of child indices from the root (quantifiers and negation have one
/// child at index 0, connectives two at 0/1).
using NodePath = std::vector<int>;

Formula subformula_at(const Formula& f, const NodePath& path);

/// A declaration of independence between two same-kind quantifiers: the node
/// at x_path is superordinated to the one at y_path and var(x) ∈ slash(y).
struct IEEPair {
  NodePath x_path;
  NodePath y_path;
};

struct PrefixEntry {
  QuantKind kind;
  std::string var;
  std::set<std::string> slash;

  bool operator==(const PrefixEntry&) const = default;
};

struct PrefixSplit {
  std::vector<PrefixEntry> prefix;  // maximal initial quantifier chain
  Formula matrix;
};

struct RegularityViolation {
  enum class Kind { SlashUnbound, RequantifiedBelow, DuplicateQuantifier };
  Kind kind;
  std::string variable;
  NodePath where;
  std::string message;
};

struct RegularityReport {
  std::vector<RegularityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// One quantifier occurrence, as collected in preorder.
struct QuantOccurrence {
  NodePath path;
  QuantKind kind;
  std::string var;
  std::set<std::string> slash;
};

Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
bool is_sentence(const Formula& f);

RegularityReport check_regular(const Formula& f);

/// Splits off the maximal initial quantifier chain; the matrix may still
/// contain quantifiers when f is not prenex.
PrefixSplit quantifier_prefix(const Formula& f);
bool is_prenex(const Formula& f);
bool is_quantifier_free(const Formula& f);

/// Rebuilds a prenex sentence from a prefix and a matrix.
Formula prefix_to_formula(const std::vector<PrefixEntry>& prefix,
                          const Formula& matrix);

std::vector<QuantOccurrence> collect_quantifiers(const Formula& f);

/// φ^{y←x}: deletes var(x) from slash(y).  Throws INVALID_PAIR unless the
/// pair addresses an I∃∃ of f.
Formula remove_independence(const Formula& f, const IEEPair& pair);

namespace detail {
/// Same surgery for either quantifier kind (used for the dual I∀∀ machinery).
Formula remove_slash_var(const Formula& f, const IEEPair& pair, QuantKind kind);
}  // namespace detail

}  // namespace ifl
