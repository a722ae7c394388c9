// Finite Z-linear combinations keyed by cells.
#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "permdiag/error.hpp"

namespace pd {

using Coef = std::int64_t;

inline Coef checked_add(Coef a, Coef b)
{
    Coef r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "coefficient overflow");
    return r;
}

inline Coef checked_mul(Coef a, Coef b)
{
    Coef r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "coefficient overflow");
    return r;
}

// Like terms are combined on insertion and zero coefficients are never kept.
template <class Key>
class LinComb {
public:
    using map_type = std::map<Key, Coef>;

    LinComb() = default;
    LinComb(const Key& k, Coef c = 1) { add(k, c); }

    void add(const Key& k, Coef c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (inserted) return;
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }

    void add(const LinComb& o, Coef scale = 1)
    {
        for (const auto& [k, c] : o.terms_) add(k, checked_mul(c, scale));
    }

    Coef coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? 0 : it->second;
    }

    LinComb& operator+=(const LinComb& o) { add(o, 1); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, -1); return *this; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const LinComb& o) const = default;

private:
    map_type terms_;
};

}  // namespace pd
