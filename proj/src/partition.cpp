#include "hookzeta/partition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hookzeta {

namespace {

void validate_parts(const std::vector<int>& parts) {
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (k + 1 < parts.size() && parts[k] < parts[k + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    validate_parts(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate_parts(parts_);
}

Partition Partition::hook_shape(int arm, int leg) {
    if (arm < 1 || leg < 0)
        throw std::invalid_argument("hook needs arm >= 1 and leg >= 0");
    std::vector<int> parts(1 + static_cast<size_t>(leg), 1);
    parts[0] = arm;
    if (arm == 1)
        return Partition(std::move(parts)); // (1, 1^leg)
    return Partition(std::move(parts));
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_)
        s += p;
    return s;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length())
        return false;
    for (size_t k = 0; k < inner.length(); ++k)
        if (inner.parts()[k] > parts_[k])
            return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k)
            os << ',';
        os << parts_[k];
    }
    os << ']';
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition syntax is [a,b,...], got '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument("bad partition part '" + tok + "'");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

bool canonical_less(const Partition& a, const Partition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb)
        return sa < sb;
    // reverse-lexicographic within a size: larger first parts come first
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape " + outer_.to_string() + "/" +
                                    inner_.to_string() + ": inner does not fit");
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (size_t r = 0; r < outer_.length(); ++r)
        for (int c = inner_.part(r); c < outer_.part(r); ++c)
            out.emplace_back(static_cast<int>(r), c);
    return out;
}

std::optional<Hook> as_hook(const Partition& p) {
    if (p.empty())
        return std::nullopt;
    for (size_t k = 1; k < p.length(); ++k)
        if (p.parts()[k] != 1)
            return std::nullopt;
    return Hook{p.parts()[0], static_cast<int>(p.length()) - 1};
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        prefix.push_back(first);
        gen_partitions(n - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> parts;
    for (int c = 1; c <= p.part(0); ++c) {
        int count = 0;
        for (int v : p.parts())
            if (v >= c)
                ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

RimHookCheck is_rim_hook(const SkewShape& s) {
    auto cells = s.cells();
    if (cells.empty())
        return {false, 0};
    std::set<std::pair<int, int>> cell_set(cells.begin(), cells.end());
    auto has = [&](int r, int c) { return cell_set.count({r, c}) != 0; };
    for (auto [r, c] : cells)
        if (has(r, c + 1) && has(r + 1, c) && has(r + 1, c + 1))
            return {false, 0};
    // 4-connectivity
    std::set<std::pair<int, int>> seen;
    std::queue<std::pair<int, int>> q;
    q.push(cells.front());
    seen.insert(cells.front());
    while (!q.empty()) {
        auto [r, c] = q.front();
        q.pop();
        const int dr[] = {1, -1, 0, 0};
        const int dc[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            std::pair<int, int> nb{r + dr[k], c + dc[k]};
            if (cell_set.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                q.push(nb);
            }
        }
    }
    if (seen.size() != cell_set.size())
        return {false, 0};
    std::set<int> rows;
    for (auto [r, c] : cells)
        rows.insert(r);
    return {true, static_cast<int>(rows.size())};
}

std::vector<std::pair<Partition, int>> addable_rim_hooks(const Partition& lambda, int r) {
    if (r < 1)
        throw std::invalid_argument("rim hook size must be >= 1");
    const int L = static_cast<int>(lambda.length()) + r;
    std::vector<int> beta(L);
    std::set<int> beta_set;
    for (int k = 0; k < L; ++k) {
        beta[k] = lambda.part(k) + (L - 1 - k);
        beta_set.insert(beta[k]);
    }
    std::vector<std::pair<Partition, int>> out;
    for (int b : beta) {
        if (beta_set.count(b + r))
            continue;
        int jumped = 0;
        for (int v : beta_set)
            if (v > b && v < b + r)
                ++jumped;
        std::vector<int> moved(beta.begin(), beta.end());
        moved.erase(std::find(moved.begin(), moved.end(), b));
        moved.push_back(b + r);
        std::sort(moved.begin(), moved.end(), std::greater<int>());
        std::vector<int> parts;
        for (int k = 0; k < L; ++k) {
            int part = moved[k] - (L - 1 - k);
            if (part > 0)
                parts.push_back(part);
        }
        out.emplace_back(Partition(std::move(parts)), 1 + jumped);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return canonical_less(x.first, y.first);
    });
    return out;
}

Integer centralizer_order(const Partition& p) {
    std::map<int, int> mult;
    for (int v : p.parts())
        ++mult[v];
    Integer z = 1;
    for (auto [value, m] : mult) {
        for (int t = 0; t < m; ++t)
            z *= value;
        z *= factorial(m);
    }
    return z;
}

} // namespace hookzeta
