#pragma once

#include <map>
#include <utility>

namespace wz {

// Finitely supported linear combination; zero coefficients are never stored.
template <class K, class C>
class LinComb {
public:
    using Map = std::map<K, C>;

    LinComb() = default;
    LinComb(const K& key, const C& coeff) { add(key, coeff); }

    void add(const K& key, const C& coeff)
    {
        if (is_zero(coeff))
            return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
            return;
        }
        it->second = it->second + coeff;
        if (is_zero(it->second))
            terms_.erase(it);
    }

    LinComb& operator+=(const LinComb& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }
    LinComb operator+(const LinComb& o) const
    {
        LinComb r = *this;
        r += o;
        return r;
    }
    LinComb operator-(const LinComb& o) const
    {
        LinComb r = *this;
        r -= o;
        return r;
    }
    LinComb scaled(const C& s) const
    {
        LinComb r;
        for (const auto& [k, c] : terms_)
            r.add(k, c * s);
        return r;
    }

    C coeff(const K& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? C(0) : it->second;
    }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

private:
    Map terms_;
};

} // namespace wz
