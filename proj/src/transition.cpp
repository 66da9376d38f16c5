#include "hookzeta/transition.hpp"

#include "hookzeta/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hookzeta {

SymExpr mn_multiply(int r, const SymExpr& a) {
    if (r < 1)
        throw std::invalid_argument("mn_multiply needs r >= 1");
    if (a.basis() != Basis::S)
        throw std::invalid_argument("mn_multiply expects an S-basis expression");
    SymExpr out(Basis::S);
    for (const auto& [lambda, c] : a.terms())
        for (const auto& [mu, ht] : addable_rim_hooks(lambda, r))
            out.add_term(mu, ht % 2 == 1 ? c : -c); // (-1)^{ht+1}
    return out;
}

SymExpr power_to_schur(const Partition& mu) {
    SymExpr out = SymExpr::one(Basis::S);
    for (int part : mu.parts()) // parts are stored largest first
        out = mn_multiply(part, out);
    return out;
}

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character needs |lambda| == |mu|");
    Rational c = power_to_schur(mu).coeff(lambda);
    if (denominator(c) != 1)
        throw std::logic_error("character came out non-integral");
    return static_cast<long long>(numerator(c));
}

CharacterTable compute_char_table(int n) {
    if (n < 1)
        throw std::invalid_argument("char_table needs n >= 1");
    CharacterTable table;
    table.n = n;
    table.row_order = partitions_of(n);
    table.col_order = table.row_order;
    const size_t count = table.row_order.size();
    table.entries.assign(count, std::vector<long long>(count, 0));
    for (size_t col = 0; col < count; ++col) {
        SymExpr expansion = power_to_schur(table.col_order[col]);
        for (size_t row = 0; row < count; ++row) {
            Rational c = expansion.coeff(table.row_order[row]);
            table.entries[row][col] = static_cast<long long>(numerator(c));
        }
    }
    return table;
}

std::string char_table_cache_dir() {
    if (const char* dir = std::getenv("HOOKZETA_CACHE_DIR"); dir && *dir)
        return dir;
    return ".hookzeta-cache";
}

std::string char_table_cache_path(int n) {
    return char_table_cache_dir() + "/char_table_" + std::to_string(n) + ".json";
}

CharacterTable char_table(int n) {
    const std::string path = char_table_cache_path(n);
    if (std::ifstream in(path); in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            CharacterTable cached = char_table_from_json_text(buf.str());
            if (cached.n == n)
                return cached;
        } catch (const std::exception&) {
            // unreadable cache entry: fall through and rebuild it
        }
    }
    CharacterTable table = compute_char_table(n);
    std::error_code ec;
    std::filesystem::create_directories(char_table_cache_dir(), ec);
    if (std::ofstream out(path, std::ios::binary); out)
        out << char_table_to_json_text(table);
    return table;
}

bool row_orthogonality_holds(const CharacterTable& table) {
    const size_t count = table.row_order.size();
    std::vector<Integer> z(count);
    for (size_t col = 0; col < count; ++col)
        z[col] = centralizer_order(table.col_order[col]);
    for (size_t a = 0; a < count; ++a) {
        for (size_t b = a; b < count; ++b) {
            Rational dot = 0;
            for (size_t col = 0; col < count; ++col)
                dot += Rational(Integer(table.entries[a][col]) * table.entries[b][col], z[col]);
            if (dot != (a == b ? 1 : 0))
                return false;
        }
    }
    return true;
}

} // namespace hookzeta
