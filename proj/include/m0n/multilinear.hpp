#pragma once

// Integer polynomials of degree at most one in each variable, stored as a
// sparse map from monomials (sets of variable labels) to coefficients.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "m0n/geometry.hpp"
#include "m0n/labels.hpp"

namespace m0n {

class MultilinearPoly {
public:
    using Terms = std::map<LabelSet, Integer>;

    MultilinearPoly() = default;
    /// Zero terms are dropped; every monomial must lie inside `vars`.
    MultilinearPoly(LabelSet vars, Terms terms);

    static MultilinearPoly constant(LabelSet vars, Integer c);
    /// t_v on the variable set `vars` (which must contain v).
    static MultilinearPoly variable(LabelSet vars, Label v);
    /// 1 + sum_{s in S} t_s.
    static MultilinearPoly one_plus_sum(LabelSet vars, const LabelSet& s);

    const LabelSet& vars() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const LabelSet& monomial) const;

    /// Same polynomial over a larger variable set.
    MultilinearPoly embed(const LabelSet& vars) const;

    std::string to_string() const;

    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

private:
    LabelSet vars_;
    Terms terms_;
};

/// Operands are embedded into the union of their variable sets.
MultilinearPoly operator+(const MultilinearPoly& p, const MultilinearPoly& q);
MultilinearPoly operator-(const MultilinearPoly& p, const MultilinearPoly& q);
MultilinearPoly operator-(const MultilinearPoly& p);
MultilinearPoly scale(const MultilinearPoly& p, const Integer& c);

/// Exact product; throws NotMultilinear if a variable would reach degree 2
/// with a nonzero coefficient.
MultilinearPoly multiply(const MultilinearPoly& p, const MultilinearPoly& q);
inline MultilinearPoly operator*(const MultilinearPoly& p, const MultilinearPoly& q) { return multiply(p, q); }

/// t_v -> sum_{s in S} t_s. The variable set becomes (vars \ {v}) + S.
MultilinearPoly substitute_sum(const MultilinearPoly& p, Label v, const LabelSet& s);

/// All substitutions t_v -> sum_{s in S_v} at once; the images must be
/// pairwise disjoint. Variables without a rule are kept.
MultilinearPoly substitute_sums(const MultilinearPoly& p, const std::vector<std::pair<Label, LabelSet>>& rules);

/// Throws MissingVariable when the assignment misses a variable of p.
Integer evaluate(const MultilinearPoly& p, const std::map<Label, Integer>& assignment);
/// Values for vars() in ascending order.
Integer evaluate(const MultilinearPoly& p, const std::vector<Integer>& values);

/// Renames variables along an injective map.
MultilinearPoly relabel(const MultilinearPoly& p, const std::vector<std::pair<Label, Label>>& renaming);

}  // namespace m0n
