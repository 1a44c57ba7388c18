#include "srx/exact_rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace srx {

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be 0 or a prime");
    return FieldSpec{p};
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(characteristic) + ")";
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

namespace {

template <class Int>
std::vector<std::vector<Int>> densify(const SparseIntMatrix& m) {
    std::vector<std::vector<Int>> a(m.rows, std::vector<Int>(m.cols, Int(0)));
    for (const auto& t : m.entries) a[t.row][t.col] += Int(t.value);
    return a;
}

std::uint64_t abs_u64(std::int64_t v) {
    return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

bool abs_less(std::int64_t a, std::int64_t b) { return abs_u64(a) < abs_u64(b); }
bool abs_less(const mpz_class& a, const mpz_class& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

// Fraction-free elimination; pivots chosen by minimal absolute value to keep
// intermediate growth down. Returns the number of pivots.
template <class Int, class MulSub>
std::size_t bareiss_rank(std::vector<std::vector<Int>>& a, MulSub mul_sub) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Int prev(1);
    std::size_t rank = 0;
    std::size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        std::size_t pr = rows, pc = cols;
        bool have = false;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = c; j < cols; ++j) {
                if (a[i][j] == Int(0)) continue;
                if (!have || abs_less(a[i][j], a[pr][pc])) {
                    pr = i;
                    pc = j;
                    have = true;
                }
            }
        if (!have) break;
        std::swap(a[r], a[pr]);
        if (pc != c)
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][pc]);
        const Int pivot = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = mul_sub(a[i][j], pivot, a[i][c], a[r][j], prev);
            a[i][c] = Int(0);
        }
        prev = pivot;
        ++rank;
        ++r;
        ++c;
    }
    return rank;
}

struct Int64Overflow {};

std::int64_t checked_mul_sub_div(std::int64_t x, std::int64_t piv, std::int64_t y,
                                 std::int64_t z, std::int64_t prev) {
    std::int64_t a = 0, b = 0, num = 0;
    if (__builtin_mul_overflow(x, piv, &a)) throw Int64Overflow{};
    if (__builtin_mul_overflow(y, z, &b)) throw Int64Overflow{};
    if (__builtin_sub_overflow(a, b, &num)) throw Int64Overflow{};
    return num / prev;  // exact by the fraction-free invariant
}

}  // namespace

std::size_t rank_bareiss_int64(const SparseIntMatrix& m, bool* overflowed) {
    if (overflowed) *overflowed = false;
    auto a = densify<std::int64_t>(m);
    try {
        return bareiss_rank<std::int64_t>(
            a, [](std::int64_t x, std::int64_t piv, std::int64_t y, std::int64_t z,
                  std::int64_t prev) { return checked_mul_sub_div(x, piv, y, z, prev); });
    } catch (const Int64Overflow&) {
        if (overflowed) *overflowed = true;
        return 0;
    }
}

std::size_t rank_bareiss_bigint(const SparseIntMatrix& m) {
    auto a = densify<mpz_class>(m);
    return bareiss_rank<mpz_class>(a, [](const mpz_class& x, const mpz_class& piv,
                                         const mpz_class& y, const mpz_class& z,
                                         const mpz_class& prev) {
        mpz_class num = x * piv - y * z;
        mpz_class out;
        mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        return out;
    });
}

namespace {

// Generic sparse elimination over a field; rows stored as sorted
// (col, value) pairs, pivot rows chosen shortest-first.
template <class Ops>
std::size_t sparse_rank(const SparseIntMatrix& m, const Ops& ops) {
    using V = typename Ops::value_type;
    using Row = std::vector<std::pair<std::uint32_t, V>>;

    std::vector<Row> rows(m.rows);
    {
        auto sorted = m.entries;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (const auto& t : sorted) {
            V v = ops.from_int(t.value);
            auto& row = rows[t.row];
            if (!row.empty() && row.back().first == t.col)
                row.back().second = ops.add(row.back().second, v);
            else
                row.emplace_back(t.col, v);
        }
        for (auto& row : rows) {
            Row filtered;
            for (auto& e : row)
                if (!ops.is_zero(e.second)) filtered.push_back(std::move(e));
            row = std::move(filtered);
        }
    }

    std::size_t rank = 0;
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) alive.push_back(i);

    auto axpy = [&](Row& target, const V& coeff, const Row& src) {
        Row out;
        out.reserve(target.size() + src.size());
        std::size_t i = 0, j = 0;
        while (i < target.size() || j < src.size()) {
            if (j == src.size() || (i < target.size() && target[i].first < src[j].first)) {
                out.push_back(target[i++]);
            } else if (i == target.size() || src[j].first < target[i].first) {
                out.emplace_back(src[j].first, ops.mul(coeff, src[j].second));
                ++j;
            } else {
                V v = ops.add(target[i].second, ops.mul(coeff, src[j].second));
                if (!ops.is_zero(v)) out.emplace_back(target[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        target = std::move(out);
    };

    while (!alive.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < alive.size(); ++k)
            if (rows[alive[k]].size() < rows[alive[best]].size()) best = k;
        const std::size_t pr = alive[best];
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(best));
        Row pivot_row = std::move(rows[pr]);
        const std::uint32_t pc = pivot_row.front().first;
        const V pinv = ops.inv(pivot_row.front().second);
        ++rank;

        std::vector<std::size_t> still;
        still.reserve(alive.size());
        for (std::size_t idx : alive) {
            auto& row = rows[idx];
            auto it = std::lower_bound(row.begin(), row.end(), pc,
                                       [](const auto& e, std::uint32_t c) { return e.first < c; });
            if (it != row.end() && it->first == pc) {
                V coeff = ops.neg(ops.mul(it->second, pinv));
                axpy(row, coeff, pivot_row);
            }
            if (!row.empty()) still.push_back(idx);
        }
        alive = std::move(still);
    }
    return rank;
}

struct RationalOps {
    using value_type = mpq_class;
    mpq_class from_int(std::int32_t v) const { return mpq_class(v); }
    bool is_zero(const mpq_class& v) const { return v == 0; }
    mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
    mpq_class neg(const mpq_class& a) const { return -a; }
    mpq_class inv(const mpq_class& a) const { return 1 / a; }
};

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t out = 1;
    b %= p;
    while (e) {
        if (e & 1) out = out * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return out;
}

struct ModPOps {
    std::uint64_t p;
    using value_type = std::uint64_t;
    std::uint64_t from_int(std::int32_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r);
    }
    bool is_zero(std::uint64_t v) const { return v == 0; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t inv(std::uint64_t a) const { return pow_mod(a, p - 2, p); }
};

}  // namespace

std::size_t rank_sparse_rational(const SparseIntMatrix& m) {
    return sparse_rank(m, RationalOps{});
}

std::size_t rank_sparse_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    if (p >= (std::uint32_t{1} << 31)) throw std::invalid_argument("modulus too large");
    return sparse_rank(m, ModPOps{p});
}

std::size_t rank_over_rationals(const SparseIntMatrix& m, const RankOptions& opts) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (m.rows > opts.dense_limit || m.cols > opts.dense_limit) return rank_sparse_rational(m);
    bool overflowed = false;
    std::size_t r = rank_bareiss_int64(m, &overflowed);
    if (!overflowed) return r;
    return rank_bareiss_bigint(m);
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p, const RankOptions& opts) {
    if (m.rows == 0 || m.cols == 0) return 0;
    (void)opts;
    return rank_sparse_mod_p(m, p);
}

std::size_t rank_over_field(const SparseIntMatrix& m, FieldSpec field, const RankOptions& opts) {
    return field.is_rational() ? rank_over_rationals(m, opts)
                               : rank_mod_p(m, field.characteristic, opts);
}

}  // namespace srx
