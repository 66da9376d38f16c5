#pragma once

#include "hookzeta/partition.hpp"
#include "hookzeta/rational.hpp"

#include <map>
#include <string>

namespace hookzeta {

enum class Basis { E, H, P, S };

char basis_letter(Basis b);
Basis basis_from_letter(char c); // throws on anything but e/h/p/s

/// Sparse linear combination of basis elements indexed by partitions, with
/// exact rational coefficients. Zero coefficients are never stored.
///
/// Conventions: e_0 = h_0 = 1 (the empty partition indexes the constant 1 in
/// every basis); h_k = 0 for k < 0.
class SymExpr {
public:
    using Terms = std::map<Partition, Rational, PartitionLess>;

    explicit SymExpr(Basis b = Basis::H) : basis_(b) {}

    static SymExpr zero(Basis b) { return SymExpr(b); }
    static SymExpr one(Basis b);
    /// e_n / h_n / p_n / s_(n); n == 0 yields one() for E, H, S and throws for P.
    static SymExpr generator(Basis b, int n);
    static SymExpr term(Basis b, Partition index, Rational coeff = 1);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Partition& index) const;

    /// Adds c * basis_element(index), dropping the term if it cancels.
    SymExpr& add_term(const Partition& index, const Rational& c);

    /// Same basis and identical term maps. For semantic equality across bases
    /// use equal().
    bool operator==(const SymExpr&) const = default;

    std::string to_text() const;
    std::string to_latex() const;

private:
    Basis basis_;
    Terms terms_;
};

/// Coefficient-wise sum; both operands must carry the same basis tag,
/// otherwise std::invalid_argument asks the caller to convert first.
SymExpr add(const SymExpr& a, const SymExpr& b);

SymExpr scale(const SymExpr& a, const Rational& c);

/// Product in a multiplicative basis (E, H, P): indices merge as sorted part
/// multisets, extended bilinearly. S-basis products are rejected; expand
/// products of Schur terms through the Murnaghan-Nakayama machinery instead.
SymExpr multiply(const SymExpr& a, const SymExpr& b);

/// Exact expansion in the H basis. Schur terms go through the Jacobi-Trudi
/// determinant det(h_{lambda_i - i + j}); power sums through the Newton
/// recurrence p_n = n h_n - sum_{k<n} h_k p_{n-k}; elementary generators
/// through the Jacobi-Trudi determinant of the conjugate column shape (1^n).
SymExpr to_h_basis(const SymExpr& a);

/// The Schur-hook expansion s_{(a,1^b)} = sum_{i=0}^{b} (-1)^i h_{a+i} e_{b-i},
/// returned in the H basis (each e factor expanded).
SymExpr hook_to_he(int arm, int leg);

/// Exact semantic equality: identical H-basis expansions.
bool equal(const SymExpr& a, const SymExpr& b);

} // namespace hookzeta
