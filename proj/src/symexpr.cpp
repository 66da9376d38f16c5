#include "hookzeta/symexpr.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hookzeta {

char basis_letter(Basis b) {
    switch (b) {
    case Basis::E: return 'e';
    case Basis::H: return 'h';
    case Basis::P: return 'p';
    case Basis::S: return 's';
    }
    return '?';
}

Basis basis_from_letter(char c) {
    switch (c) {
    case 'e': case 'E': return Basis::E;
    case 'h': case 'H': return Basis::H;
    case 'p': case 'P': return Basis::P;
    case 's': case 'S': return Basis::S;
    }
    throw std::invalid_argument(std::string("unknown basis letter '") + c + "'");
}

SymExpr SymExpr::one(Basis b) {
    SymExpr out(b);
    out.add_term(Partition{}, 1);
    return out;
}

SymExpr SymExpr::generator(Basis b, int n) {
    if (n < 0)
        throw std::invalid_argument("generator index must be >= 0");
    if (n == 0) {
        if (b == Basis::P)
            throw std::domain_error("p_0 is not defined");
        return one(b); // e_0 = h_0 = 1, s_() = 1
    }
    return term(b, Partition{n});
}

SymExpr SymExpr::term(Basis b, Partition index, Rational coeff) {
    SymExpr out(b);
    out.add_term(index, coeff);
    return out;
}

Rational SymExpr::coeff(const Partition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

SymExpr& SymExpr::add_term(const Partition& index, const Rational& c) {
    if (c == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

namespace {

std::string render(const SymExpr& e, bool latex) {
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [index, c] : e.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        if (index.empty()) {
            os << (latex && denominator(a) != 1
                       ? "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}"
                       : to_fraction_string(a));
            continue;
        }
        if (a != 1) {
            if (latex && denominator(a) != 1)
                os << "\\frac{" << numerator(a) << "}{" << denominator(a) << "} ";
            else
                os << to_fraction_string(a) << (latex ? " " : "*");
        }
        if (latex) {
            os << basis_letter(e.basis()) << "_{(";
            const auto& parts = index.parts();
            for (size_t k = 0; k < parts.size(); ++k)
                os << (k ? "," : "") << parts[k];
            os << ")}";
        } else {
            os << basis_letter(e.basis()) << index.to_string();
        }
    }
    return os.str();
}

} // namespace

std::string SymExpr::to_text() const { return render(*this, false); }
std::string SymExpr::to_latex() const { return render(*this, true); }

SymExpr add(const SymExpr& a, const SymExpr& b) {
    if (a.basis() != b.basis())
        throw std::invalid_argument(
            std::string("cannot add expressions tagged '") + basis_letter(a.basis()) +
            "' and '" + basis_letter(b.basis()) + "'; convert with to_h_basis first");
    SymExpr out = a;
    for (const auto& [index, c] : b.terms())
        out.add_term(index, c);
    return out;
}

SymExpr scale(const SymExpr& a, const Rational& c) {
    SymExpr out(a.basis());
    if (c == 0)
        return out;
    for (const auto& [index, q] : a.terms())
        out.add_term(index, q * c);
    return out;
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.length() + b.length());
    parts.insert(parts.end(), a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

} // namespace

SymExpr multiply(const SymExpr& a, const SymExpr& b) {
    if (a.basis() != b.basis())
        throw std::invalid_argument("multiply needs matching basis tags");
    if (a.basis() == Basis::S)
        throw std::invalid_argument(
            "S-basis products are not multiplicative on indices; use the "
            "Murnaghan-Nakayama expansion");
    SymExpr out(a.basis());
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            out.add_term(merge_parts(la, lb), ca * cb);
    return out;
}

namespace {

// Process-wide caches for H-basis expansions. Lookup is under the lock;
// computation happens outside it, so a racing recomputation produces the same
// value and the caches stay monotone.
std::mutex& expansion_mutex() {
    static std::mutex m;
    return m;
}

SymExpr jacobi_trudi_h(const Partition& lambda);

SymExpr h_generator_times(int k, const SymExpr& h_expr) {
    if (k == 0)
        return h_expr;
    SymExpr out(Basis::H);
    for (const auto& [index, c] : h_expr.terms())
        out.add_term(merge_parts(index, Partition{k}), c);
    return out;
}

SymExpr compute_jacobi_trudi(const Partition& lambda) {
    const int ell = static_cast<int>(lambda.length());
    if (ell == 0)
        return SymExpr::one(Basis::H);
    // Cofactor expansion along the top remaining row, memoized on the set of
    // unused columns (the row index is determined by how many columns remain).
    std::unordered_map<uint32_t, SymExpr> memo;
    std::function<const SymExpr&(uint32_t)> det = [&](uint32_t mask) -> const SymExpr& {
        auto it = memo.find(mask);
        if (it != memo.end())
            return it->second;
        SymExpr result(Basis::H);
        if (mask == 0) {
            result = SymExpr::one(Basis::H);
        } else {
            int row = ell - std::popcount(mask);
            int pos = 0;
            for (int col = 0; col < ell; ++col) {
                if (!(mask & (1u << col)))
                    continue;
                int k = lambda.part(row) - row + col;
                if (k >= 0) {
                    SymExpr piece = h_generator_times(k, det(mask & ~(1u << col)));
                    result = add(result, pos % 2 == 0 ? piece : scale(piece, -1));
                }
                ++pos;
            }
        }
        return memo.emplace(mask, std::move(result)).first->second;
    };
    return det((1u << ell) - 1);
}

SymExpr jacobi_trudi_h(const Partition& lambda) {
    static std::map<Partition, SymExpr, PartitionLess> cache;
    {
        std::lock_guard<std::mutex> lock(expansion_mutex());
        auto it = cache.find(lambda);
        if (it != cache.end())
            return it->second;
    }
    SymExpr value = compute_jacobi_trudi(lambda);
    std::lock_guard<std::mutex> lock(expansion_mutex());
    return cache.emplace(lambda, std::move(value)).first->second;
}

SymExpr e_to_h(int n) {
    return jacobi_trudi_h(n == 0 ? Partition{} : Partition::hook_shape(1, n - 1));
}

SymExpr power_to_h(int n) {
    static std::map<int, SymExpr> cache;
    {
        std::lock_guard<std::mutex> lock(expansion_mutex());
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    SymExpr value(Basis::H);
    if (n == 1) {
        value = SymExpr::generator(Basis::H, 1);
    } else {
        value = scale(SymExpr::generator(Basis::H, n), n);
        for (int k = 1; k < n; ++k)
            value = add(value, scale(h_generator_times(k, power_to_h(n - k)), -1));
    }
    std::lock_guard<std::mutex> lock(expansion_mutex());
    return cache.emplace(n, std::move(value)).first->second;
}

} // namespace

SymExpr to_h_basis(const SymExpr& a) {
    if (a.basis() == Basis::H)
        return a;
    SymExpr out(Basis::H);
    for (const auto& [index, c] : a.terms()) {
        SymExpr expanded = SymExpr::one(Basis::H);
        switch (a.basis()) {
        case Basis::S:
            expanded = jacobi_trudi_h(index);
            break;
        case Basis::P:
            for (int part : index.parts())
                expanded = multiply(expanded, power_to_h(part));
            break;
        case Basis::E:
            for (int part : index.parts())
                expanded = multiply(expanded, e_to_h(part));
            break;
        case Basis::H:
            break;
        }
        out = add(out, scale(expanded, c));
    }
    return out;
}

SymExpr hook_to_he(int arm, int leg) {
    if (arm < 1 || leg < 0)
        throw std::invalid_argument("hook_to_he needs arm >= 1 and leg >= 0");
    SymExpr out(Basis::H);
    for (int i = 0; i <= leg; ++i) {
        SymExpr piece = h_generator_times(arm + i, e_to_h(leg - i));
        out = add(out, i % 2 == 0 ? piece : scale(piece, -1));
    }
    return out;
}

bool equal(const SymExpr& a, const SymExpr& b) {
    if (a.basis() == b.basis())
        return a.terms() == b.terms(); // basis elements are independent
    return to_h_basis(a).terms() == to_h_basis(b).terms();
}

} // namespace hookzeta
