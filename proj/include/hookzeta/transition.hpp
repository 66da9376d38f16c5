#pragma once

#include "hookzeta/partition.hpp"
#include "hookzeta/symexpr.hpp"

#include <string>
#include <vector>

namespace hookzeta {

/// Irreducible character table of the symmetric group on n letters:
/// entries[row][col] = chi^lambda(mu) with rows and columns both indexed by
/// partitions_of(n) in canonical order. Obtained from the p-to-s transition.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> row_order; // lambda
    std::vector<Partition> col_order; // mu
    std::vector<std::vector<long long>> entries;

    bool operator==(const CharacterTable&) const = default;
};

/// p_r * a for an S-basis expression, via the rim-hook expansion
/// p_r s_lambda = sum over mu (-1)^{ht(mu/lambda)+1} s_mu.
SymExpr mn_multiply(int r, const SymExpr& a);

/// p_mu expanded in the S basis, applying one rim-hook step per part,
/// largest part first (the result is order-independent).
SymExpr power_to_schur(const Partition& mu);

/// chi^lambda(mu): coefficient of s_lambda in power_to_schur(mu).
/// Throws std::invalid_argument when |lambda| != |mu|.
long long character(const Partition& lambda, const Partition& mu);

/// Full table, without touching the disk cache.
CharacterTable compute_char_table(int n);

/// Full table, backed by a write-once JSON cache file under
/// HOOKZETA_CACHE_DIR (default ./.hookzeta-cache).
CharacterTable char_table(int n);

std::string char_table_cache_dir();
std::string char_table_cache_path(int n);

/// Exact row orthogonality: sum_mu chi^l(mu) chi^l'(mu) / z_mu = delta_{l,l'}.
bool row_orthogonality_holds(const CharacterTable& table);

} // namespace hookzeta
