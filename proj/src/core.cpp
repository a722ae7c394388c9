#include "permdiag/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace pd {

OrderedPartition::OrderedPartition(int n, Blocks blocks) : n_(n), blocks_(std::move(blocks))
{
    require(n_ >= 1, Errc::invalid_argument, "partition ground size must be positive");
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    int count = 0;
    for (auto& b : blocks_) {
        require(!b.empty(), Errc::invalid_argument, "empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            require(x >= 1 && x <= n_, Errc::invalid_argument, "element out of range");
            require(!seen[static_cast<std::size_t>(x)], Errc::invalid_argument, "duplicate element");
            seen[static_cast<std::size_t>(x)] = 1;
            ++count;
        }
    }
    require(count == n_, Errc::invalid_argument, "partition does not cover {1..n}");
}

OrderedPartition OrderedPartition::top(int n)
{
    Block b(static_cast<std::size_t>(n));
    std::iota(b.begin(), b.end(), 1);
    return OrderedPartition(n, {b});
}

OrderedPartition OrderedPartition::vertex(std::span<const int> perm)
{
    Blocks bs;
    for (int x : perm) bs.push_back({x});
    return OrderedPartition(static_cast<int>(perm.size()), std::move(bs));
}

int OrderedPartition::block_of(int x) const
{
    for (int k = 0; k < size(); ++k)
        if (std::binary_search(blocks_[k].begin(), blocks_[k].end(), x)) return k;
    return -1;
}

OrderedPartition OrderedPartition::reversed() const
{
    Blocks bs(blocks_.rbegin(), blocks_.rend());
    return OrderedPartition(n_, std::move(bs));
}

std::strong_ordering OrderedPartition::operator<=>(const OrderedPartition& o) const
{
    if (auto c = n_ <=> o.n_; c != 0) return c;
    if (auto c = size() <=> o.size(); c != 0) return c;
    return blocks_ <=> o.blocks_;
}

int permutation_sign(std::span<const int> seq)
{
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

int shuffle_sign(std::span<const int> m, std::span<const int> n)
{
    long inv = 0;
    for (int a : m)
        for (int b : n)
            if (a > b) ++inv;
    return inv % 2 ? -1 : 1;
}

static int parity_sign(long e) { return e % 2 ? -1 : 1; }

PartitionSigns partition_signs(const OrderedPartition& u)
{
    PartitionSigns s;
    std::vector<int> seq;
    long rexp = 0;
    for (const auto& b : u.blocks()) {
        seq.insert(seq.end(), b.begin(), b.end());
        long c = static_cast<long>(b.size());
        rexp += c * (c - 1) / 2;
    }
    s.psgn = permutation_sign(seq);
    s.rsgn = parity_sign(rexp);
    const int p = u.size();
    long e1 = 0;
    for (int i = 1; i <= p - 1; ++i) e1 += static_cast<long>(i) * static_cast<long>(u.block(p - i - 1).size());
    s.sgn1 = parity_sign(e1) * s.psgn;
    long pm1 = p - 1;
    s.sgn2 = s.sgn1 * parity_sign(pm1 * (pm1 - 1) / 2);
    return s;
}

SignedFace face(const OrderedPartition& u, int k, std::span<const int> m, Side side)
{
    require(k >= 0 && k < u.size(), Errc::out_of_range, "block index out of range");
    const Block& uk = u.block(k);
    Block mm(m.begin(), m.end());
    std::sort(mm.begin(), mm.end());
    require(!mm.empty(), Errc::precondition, "face subset is empty");
    require(std::adjacent_find(mm.begin(), mm.end()) == mm.end(), Errc::precondition, "face subset has repeats");
    require(std::includes(uk.begin(), uk.end(), mm.begin(), mm.end()), Errc::precondition, "face subset not in block");
    require(mm.size() < uk.size(), Errc::precondition, "face subset equals the block");

    Block rest;
    std::set_difference(uk.begin(), uk.end(), mm.begin(), mm.end(), std::back_inserter(rest));
    // The dual operator on V_k with N is the ordinary one for V_k \ N.
    if (side == Side::right) std::swap(mm, rest);

    long e = static_cast<long>(mm.size());
    for (int i = 0; i < k; ++i) e += static_cast<long>(u.block(i).size()) - 1;
    SignedFace f;
    f.coefficient = parity_sign(e) * shuffle_sign(mm, rest);
    Blocks bs;
    for (int i = 0; i < u.size(); ++i) {
        if (i == k) {
            bs.push_back(mm);
            bs.push_back(rest);
        } else {
            bs.push_back(u.block(i));
        }
    }
    f.face = OrderedPartition(u.ground_size(), std::move(bs));
    return f;
}

Chain boundary(const OrderedPartition& u)
{
    Chain out;
    for (int k = 0; k < u.size(); ++k) {
        const Block& b = u.block(k);
        const std::size_t c = b.size();
        if (c < 2) continue;
        const std::uint64_t full = (std::uint64_t{1} << c) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            Block m;
            for (std::size_t t = 0; t < c; ++t)
                if (mask >> t & 1) m.push_back(b[t]);
            SignedFace f = face(u, k, m);
            out.add(f.face, f.coefficient);
        }
    }
    return out;
}

Chain boundary(const Chain& c)
{
    Chain out;
    for (const auto& [u, coef] : c) out.add(boundary(u), coef);
    return out;
}

TensorChain tensor_boundary(const TensorChain& t)
{
    TensorChain out;
    for (const auto& [pr, coef] : t) {
        const auto& [u, v] = pr;
        for (const auto& [du, c] : boundary(u)) out.add({du, v}, checked_mul(coef, c));
        const Coef s = u.dim() % 2 ? -coef : coef;
        for (const auto& [dv, c] : boundary(v)) out.add({u, dv}, checked_mul(s, c));
    }
    return out;
}

static void enumerate_rec(std::vector<int>& remaining, Blocks& cur, int n, std::optional<int> p,
                          std::vector<OrderedPartition>& out)
{
    if (remaining.empty()) {
        if (!p || static_cast<int>(cur.size()) == *p) out.emplace_back(n, cur);
        return;
    }
    if (p && static_cast<int>(cur.size()) >= *p) return;
    const std::size_t r = remaining.size();
    // Leave room for the blocks still required.
    const std::size_t need_after = p ? static_cast<std::size_t>(*p) - cur.size() - 1 : 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        Block b;
        std::vector<int> rest;
        for (std::size_t t = 0; t < r; ++t) (mask >> t & 1 ? b : rest).push_back(remaining[t]);
        if (rest.size() < need_after) continue;
        if (p && cur.size() + 1 == static_cast<std::size_t>(*p) && !rest.empty()) continue;
        cur.push_back(std::move(b));
        enumerate_rec(rest, cur, n, p, out);
        cur.pop_back();
    }
}

std::vector<OrderedPartition> enumerate_faces(int n, std::optional<int> p)
{
    require(n >= 1, Errc::out_of_range, "n must be positive");
    if (p) require(*p >= 1 && *p <= n, Errc::out_of_range, "block count out of range");
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    Blocks cur;
    std::vector<OrderedPartition> out;
    enumerate_rec(all, cur, n, p, out);
    std::sort(out.begin(), out.end());
    return out;
}

Blocks relabel(const OrderedPartition& u, std::span<const int> target)
{
    require(static_cast<int>(target.size()) == u.ground_size(), Errc::invalid_argument, "relabel size mismatch");
    Blocks out;
    for (const auto& b : u.blocks()) {
        Block nb;
        for (int x : b) nb.push_back(target[static_cast<std::size_t>(x - 1)]);
        out.push_back(std::move(nb));
    }
    return out;
}

OrderedPartition concat(int n, const std::vector<Blocks>& parts)
{
    Blocks all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return OrderedPartition(n, std::move(all));
}

namespace {

// With numbers, each maximal digit run is one element and ',' separates
// elements; otherwise every digit is an element.
OrderedPartition parse_blocks(const std::string& s, bool numbers)
{
    const bool commas = numbers;
    Blocks blocks;
    Block cur;
    std::string num;
    bool block_open = false;
    auto flush_num = [&] {
        if (num.empty()) fail(Errc::parse_error, "empty element in '" + s + "'");
        if (num.size() > 6) fail(Errc::parse_error, "element too large in '" + s + "'");
        cur.push_back(std::stoi(num));
        num.clear();
    };
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            block_open = true;
            if (commas) {
                num.push_back(ch);
            } else {
                if (ch == '0') fail(Errc::parse_error, "element 0 in '" + s + "'");
                cur.push_back(ch - '0');
            }
        } else if (ch == ',' ) {
            if (!commas) fail(Errc::parse_error, "bad separator");
            flush_num();
        } else if (ch == '|') {
            if (commas) flush_num();
            if (cur.empty()) fail(Errc::parse_error, "empty block in '" + s + "'");
            blocks.push_back(std::move(cur));
            cur.clear();
            block_open = false;
        } else {
            fail(Errc::parse_error, std::string("unexpected character '") + ch + "' in '" + s + "'");
        }
    }
    if (commas) flush_num();
    if (!block_open || cur.empty()) fail(Errc::parse_error, "empty block in '" + s + "'");
    blocks.push_back(std::move(cur));
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    try {
        return OrderedPartition(n, std::move(blocks));
    } catch (const Error& e) {
        fail(Errc::parse_error, std::string(e.what()) + " in '" + s + "'");
    }
}

}  // namespace

OrderedPartition parse_partition(const std::string& text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) fail(Errc::parse_error, "empty partition text");
    const std::string s = text.substr(first, last - first + 1);
    if (s.find(',') != std::string::npos) return parse_blocks(s, true);
    try {
        return parse_blocks(s, false);
    } catch (const Error&) {
        // "10|9|...|1": singleton blocks over a ground set larger than 9
        try {
            return parse_blocks(s, true);
        } catch (const Error&) {
        }
        throw;
    }
}

std::string render_partition(const OrderedPartition& u)
{
    std::string out;
    const bool commas = u.ground_size() > 9;
    for (int k = 0; k < u.size(); ++k) {
        if (k) out.push_back('|');
        const Block& b = u.block(k);
        for (std::size_t t = 0; t < b.size(); ++t) {
            if (commas && t) out.push_back(',');
            out += std::to_string(b[t]);
        }
    }
    return out;
}

}  // namespace pd
