#include "udgfvs/representative.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "udgfvs/errors.hpp"
#include "udgfvs/union_find.hpp"

namespace udgfvs {

void canonicalize(BlockLabels& labels) {
    std::uint8_t map[256];
    std::fill(std::begin(map), std::end(map), std::uint8_t{255});
    std::uint8_t next = 0;
    for (auto& l : labels) {
        if (map[l] == 255) map[l] = next++;
        l = map[l];
    }
}

std::size_t block_count(const BlockLabels& labels) {
    std::size_t count = 0;
    for (auto l : labels) count = std::max<std::size_t>(count, std::size_t{l} + 1);
    return count;
}

std::optional<BlockLabels> glue_acyclic(const BlockLabels& a, const BlockLabels& b) {
    const std::size_t s = a.size();
    UnionFind uf(s);
    std::vector<int> first(256, -1);
    for (std::size_t i = 0; i < s; ++i) {
        auto& f = first[a[i]];
        if (f < 0) f = static_cast<int>(i);
        else uf.unite(static_cast<std::size_t>(f), i);
    }
    std::fill(first.begin(), first.end(), -1);
    for (std::size_t i = 0; i < s; ++i) {
        auto& f = first[b[i]];
        if (f < 0) f = static_cast<int>(i);
        else if (!uf.unite(static_cast<std::size_t>(f), i)) return std::nullopt;
    }
    BlockLabels out(s);
    for (std::size_t i = 0; i < s; ++i) out[i] = static_cast<std::uint8_t>(uf.find(i));
    canonicalize(out);
    return out;
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

class BinaryBasis {
public:
    explicit BinaryBasis(std::size_t dim) : words_((dim + 63) / 64) {}

    // True if v was independent (and is now part of the basis).
    bool insert(std::vector<std::uint64_t> v) {
        std::size_t w = 0;
        while (true) {
            while (w < words_ && v[w] == 0) ++w;
            if (w == words_) return false;
            const std::size_t pivot = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
            const auto it = basis_.find(pivot);
            if (it == basis_.end()) {
                basis_.emplace(pivot, std::move(v));
                return true;
            }
            const auto& b = it->second;
            for (std::size_t i = w; i < words_; ++i) v[i] ^= b[i];
        }
    }

    std::size_t words() const { return words_; }

private:
    std::size_t words_;
    std::map<std::size_t, std::vector<std::uint64_t>> basis_;
};

// Indicator vector of the transversals of a canonical partition with b blocks
// over s elements. Coordinates: (b-1)-subsets of {1..s-1}, colex ranked.
std::vector<std::uint64_t> transversal_vector(const BlockLabels& labels, std::size_t b, std::size_t words) {
    const std::size_t s = labels.size();
    std::vector<std::vector<std::size_t>> blocks(b);
    for (std::size_t i = 1; i < s; ++i) {
        if (labels[i] != 0) blocks[labels[i]].push_back(i - 1);
    }
    std::vector<std::uint64_t> vec(words, 0);
    std::vector<std::size_t> pick(b, 0);  // pick[j] indexes blocks[j], j >= 1
    std::vector<std::size_t> chosen(b - 1);
    while (true) {
        for (std::size_t j = 1; j < b; ++j) chosen[j - 1] = blocks[j][pick[j]];
        std::sort(chosen.begin(), chosen.end());
        std::uint64_t rank = 0;
        for (std::size_t i = 0; i < chosen.size(); ++i) rank += binomial(chosen[i], i + 1);
        vec[rank / 64] |= std::uint64_t{1} << (rank % 64);
        std::size_t j = 1;
        while (j < b && ++pick[j] == blocks[j].size()) pick[j++] = 0;
        if (j >= b) break;
    }
    return vec;
}

}  // namespace

std::vector<std::size_t> representative_rows(std::span<const TableRow> rows) {
    if (rows.size() <= 1) {
        std::vector<std::size_t> all(rows.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        return all;
    }
    const std::size_t s = rows.front().blocks.size();
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rows[a].value != rows[b].value) return rows[a].value < rows[b].value;
        return rows[a].blocks < rows[b].blocks;
    });

    std::map<std::size_t, BinaryBasis> bases;  // block count -> basis
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        const auto& labels = rows[idx].blocks;
        if (labels.size() != s) throw InputError("rows of one table must share the kept signature");
        if (s == 0) {
            if (kept.empty()) kept.push_back(idx);
            continue;
        }
        const std::size_t b = block_count(labels);
        const std::uint64_t dim = binomial(s - 1, b - 1);
        if (dim > kMaxRankDimension) {
            kept.push_back(idx);
            continue;
        }
        auto it = bases.try_emplace(b, static_cast<std::size_t>(dim)).first;
        if (it->second.insert(transversal_vector(labels, b, it->second.words()))) kept.push_back(idx);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

RepresentativeTable rank_reduce(const RepresentativeTable& table) {
    std::map<BlockLabels, int> best;
    for (const auto& row : table.rows) {
        BlockLabels labels = row.blocks;
        canonicalize(labels);
        const auto [it, inserted] = best.try_emplace(std::move(labels), row.value);
        if (!inserted) it->second = std::min(it->second, row.value);
    }
    std::vector<TableRow> unique;
    for (const auto& [labels, value] : best) unique.push_back({labels, value});
    RepresentativeTable out;
    out.kept = table.kept;
    out.reduced = true;
    for (std::size_t i : representative_rows(unique)) out.rows.push_back(unique[i]);
    return out;
}

}  // namespace udgfvs
