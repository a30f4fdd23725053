#include "lzlab/word_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lzlab {

namespace {

struct Naming {
    std::vector<std::uint32_t> ids;
    std::uint32_t distinct = 0;
};

// Dense ranks of the pairs (names[p], names[p + shift]) for p < count.
Naming rank_pairs(const Naming& in, std::size_t shift, std::size_t count) {
    const std::size_t k = in.distinct;
    std::vector<std::uint32_t> bucket(k + 1);
    std::vector<std::uint32_t> by_second(count);
    std::vector<std::uint32_t> order(count);

    // LSD radix: stable counting sort on the second component, then the first.
    for (std::size_t p = 0; p < count; ++p) ++bucket[in.ids[p + shift] + 1];
    for (std::size_t i = 1; i <= k; ++i) bucket[i] += bucket[i - 1];
    for (std::size_t p = 0; p < count; ++p) by_second[bucket[in.ids[p + shift]]++] = static_cast<std::uint32_t>(p);

    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::size_t p = 0; p < count; ++p) ++bucket[in.ids[p] + 1];
    for (std::size_t i = 1; i <= k; ++i) bucket[i] += bucket[i - 1];
    for (std::uint32_t p : by_second) order[bucket[in.ids[p]]++] = p;

    Naming out;
    out.ids.resize(count);
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t p = order[i];
        if (i > 0) {
            const std::uint32_t q = order[i - 1];
            if (in.ids[p] != in.ids[q] || in.ids[p + shift] != in.ids[q + shift]) ++next;
        }
        out.ids[p] = next;
    }
    out.distinct = count == 0 ? 0 : next + 1;
    return out;
}

// Once all words are distinct, longer words stay distinct and the start
// position is a valid dense name.
void name_by_position(Naming& cur, std::size_t count) {
    cur.ids.resize(count);
    std::iota(cur.ids.begin(), cur.ids.end(), std::uint32_t{0});
    cur.distinct = static_cast<std::uint32_t>(count);
}

}  // namespace

WordIndex::WordIndex(std::span<const Symbol> x, std::size_t length) : length_(length) {
    if (length == 0) throw std::invalid_argument("WordIndex: word length must be >= 1");
    if (x.size() >= std::numeric_limits<std::uint32_t>::max()) {
        throw std::length_error("WordIndex: sequence too long for 32-bit positions");
    }
    const std::size_t n = x.size();
    if (n < length) return;

    Naming cur;
    cur.ids.assign(x.begin(), x.end());
    {
        // Compact symbol values to dense ids so bucket arrays stay small.
        std::vector<std::uint32_t> remap(Alphabet::kMaxSize, std::numeric_limits<std::uint32_t>::max());
        for (Symbol s : x) remap[s] = 0;
        std::uint32_t next = 0;
        for (auto& r : remap) {
            if (r == 0) r = next++;
        }
        for (auto& id : cur.ids) id = remap[id];
        cur.distinct = next;
    }

    std::size_t cur_len = 1;
    while (cur_len * 2 <= length) {
        const std::size_t count = n - 2 * cur_len + 1;
        if (cur.distinct == n - cur_len + 1) {
            name_by_position(cur, count);
        } else {
            cur = rank_pairs(cur, cur_len, count);
        }
        cur_len *= 2;
    }
    if (cur_len < length) {
        const std::size_t count = n - length + 1;
        if (cur.distinct == n - cur_len + 1) {
            name_by_position(cur, count);
        } else {
            cur = rank_pairs(cur, length - cur_len, count);
        }
    }
    ids_ = std::move(cur.ids);
    distinct_ = cur.distinct;
}

std::vector<std::uint64_t> WordIndex::first_returns() const {
    constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> last(distinct_, kNone);
    std::vector<std::uint64_t> out(ids_.size(), 0);
    for (std::size_t t = 0; t < ids_.size(); ++t) {
        auto& seen = last[ids_[t]];
        if (seen != kNone) out[t] = t - seen;
        seen = static_cast<std::uint32_t>(t);
    }
    return out;
}

WordIndex::Occurrences WordIndex::occurrences() const {
    Occurrences occ;
    occ.offsets.assign(static_cast<std::size_t>(distinct_) + 1, 0);
    for (std::uint32_t id : ids_) ++occ.offsets[id + 1];
    for (std::size_t i = 1; i < occ.offsets.size(); ++i) occ.offsets[i] += occ.offsets[i - 1];
    occ.positions.resize(ids_.size());
    std::vector<std::uint32_t> fill(occ.offsets.begin(), occ.offsets.end() - 1);
    for (std::size_t p = 0; p < ids_.size(); ++p) occ.positions[fill[ids_[p]]++] = static_cast<std::uint32_t>(p);
    return occ;
}

}  // namespace lzlab
