#include "groves/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "groves/errors.hpp"

namespace groves {

Partition::Partition(int n, std::vector<std::vector<int>> parts) : n_(n), parts_(std::move(parts)) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::size_t covered = 0;
    for (auto& part : parts_) {
        if (part.empty()) throw ShapeError("empty part");
        std::sort(part.begin(), part.end());
        for (int e : part) {
            if (e < 1 || e > n) throw ShapeError("partition element out of range");
            if (seen[static_cast<std::size_t>(e)]) throw ShapeError("duplicate partition element");
            seen[static_cast<std::size_t>(e)] = 1;
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(n)) throw ShapeError("partition does not cover {1..n}");
    std::sort(parts_.begin(), parts_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

Partition build_partition(const std::vector<std::vector<int>>& parts) {
    int count = 0;
    for (const auto& p : parts) count += static_cast<int>(p.size());
    return Partition(count, parts);
}

}  // namespace

Partition Partition::parse(const std::string& text) {
    const auto tokens = split(text, '|');
    for (const auto& t : tokens)
        if (t.empty()) throw ParseError("empty part in partition string: " + text);

    const bool has_comma = text.find(',') != std::string::npos;
    bool digits_only = true;
    for (char c : text)
        if (c != '|' && (c < '1' || c > '9')) digits_only = false;

    // Single-digit concatenated style, e.g. "1|278|345|6".
    if (!has_comma && digits_only) {
        std::vector<std::vector<int>> parts;
        for (const auto& t : tokens) {
            std::vector<int> part;
            for (char c : t) part.push_back(c - '0');
            parts.push_back(std::move(part));
        }
        try {
            return build_partition(parts);
        } catch (const ShapeError&) {
            // Fall through to the comma/number reading (e.g. "1|2|...|10").
        }
    }

    std::vector<std::vector<int>> parts;
    for (const auto& t : tokens) {
        std::vector<int> part;
        for (const auto& item : split(t, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad partition element in: " + text);
            part.push_back(std::stoi(item));
        }
        parts.push_back(std::move(part));
    }
    try {
        return build_partition(parts);
    } catch (const ShapeError& e) {
        throw ParseError(std::string("bad partition string \"") + text + "\": " + e.what());
    }
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> parts;
    for (int i = 1; i <= n; ++i) parts.push_back({i});
    return Partition(n, std::move(parts));
}

Partition Partition::whole(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return Partition(n, {all});
}

std::size_t Partition::part_of(int i) const {
    for (std::size_t k = 0; k < parts_.size(); ++k)
        if (std::binary_search(parts_[k].begin(), parts_[k].end(), i)) return k;
    throw ShapeError("element not in partition");
}

bool Partition::is_planar() const {
    // Crossing iff some a<b<c<d has a,c in one part and b,d in a different one.
    std::vector<std::size_t> owner(static_cast<std::size_t>(n_) + 1);
    for (std::size_t k = 0; k < parts_.size(); ++k)
        for (int e : parts_[k]) owner[static_cast<std::size_t>(e)] = k;
    for (int a = 1; a <= n_; ++a)
        for (int b = a + 1; b <= n_; ++b) {
            if (owner[a] == owner[b]) continue;
            for (int c = b + 1; c <= n_; ++c) {
                if (owner[c] != owner[a]) continue;
                for (int d = c + 1; d <= n_; ++d)
                    if (owner[d] == owner[b]) return false;
            }
        }
    return true;
}

bool Partition::all_parts_at_most(std::size_t k) const {
    for (const auto& p : parts_)
        if (p.size() > k) return false;
    return true;
}

std::vector<int> Partition::singleton_elements() const {
    std::vector<int> r;
    for (const auto& p : parts_)
        if (p.size() == 1) r.push_back(p[0]);
    return r;
}

std::vector<std::vector<int>> Partition::parts_of_size(std::size_t k) const {
    std::vector<std::vector<int>> r;
    for (const auto& p : parts_)
        if (p.size() == k) r.push_back(p);
    return r;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    const bool compact = n_ <= 9;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out << '|';
        for (std::size_t i = 0; i < parts_[k].size(); ++i) {
            if (i && !compact) out << ',';
            out << parts_[k][i];
        }
    }
    return out.str();
}

bool Partition::operator<(const Partition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return parts_ < o.parts_;
}

void add_to(PartitionSum& sum, const Partition& p, const Integer& c) {
    if (c == 0) return;
    auto it = sum.find(p);
    if (it == sum.end()) {
        sum.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) sum.erase(it);
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

int inner_product_t(const Partition& t, const Partition& s) {
    if (t.n() != s.n()) throw ShapeError("inner product on mismatched node counts");
    const int n = t.n();
    if (t.part_count() + s.part_count() != static_cast<std::size_t>(n) + 1) return 0;
    UnionFind uf(n);
    int classes = n;
    for (const auto& part : t.parts())
        for (std::size_t i = 1; i < part.size(); ++i)
            if (uf.unite(part[0] - 1, part[i] - 1)) --classes;
    for (const auto& part : s.parts())
        for (std::size_t i = 1; i < part.size(); ++i)
            if (uf.unite(part[0] - 1, part[i] - 1)) --classes;
    return classes == 1 ? 1 : 0;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    if (n <= 0) return out;
    // Restricted growth strings: a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    auto emit = [&]() {
        int blocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
        for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(a[i])].push_back(i + 1);
        out.emplace_back(n, std::move(parts));
    };
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            a[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(mx, v));
        }
    };
    rec(rec, 0, -1);
    return out;
}

std::vector<Partition> planar_partitions(int n) {
    std::vector<Partition> out;
    for (auto& p : all_partitions(n))
        if (p.is_planar()) out.push_back(std::move(p));
    return out;
}

}  // namespace groves
