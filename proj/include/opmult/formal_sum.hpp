#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace opmult {

nlohmann::json integer_to_json(const mpz_class& v);

/// Finite Z-linear combination of basis elements of one arity. Zero
/// coefficients are never stored. A zero sum compares equal to every other
/// zero sum and adopts the arity of whatever is added to it.
template <typename E>
class FormalSum {
public:
    using Terms = std::map<E, mpz_class>;

    FormalSum() = default;
    explicit FormalSum(std::size_t arity) : arity_(arity) {}
    FormalSum(std::size_t arity, const E& e, mpz_class c = 1) : arity_(arity)
    {
        add_term(e, std::move(c));
    }

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    mpz_class coefficient(const E& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    void add_term(const E& e, const mpz_class& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) { return accumulate(o, 1); }
    FormalSum& operator-=(const FormalSum& o) { return accumulate(o, -1); }

    /// this += c * o
    FormalSum& accumulate(const FormalSum& o, const mpz_class& c)
    {
        if (o.is_zero() || c == 0)
            return *this;
        if (is_zero())
            arity_ = o.arity_;
        else if (arity_ != o.arity_)
            throw std::invalid_argument("formal sums of different arity: " +
                                        std::to_string(arity_) + " and " +
                                        std::to_string(o.arity_));
        for (const auto& [e, v] : o.terms_)
            add_term(e, c * v);
        return *this;
    }

    FormalSum& operator*=(const mpz_class& c)
    {
        if (c == 0)
            terms_.clear();
        else
            for (auto& [e, v] : terms_)
                v *= c;
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator-(FormalSum a) { return a *= -1; }
    friend FormalSum operator*(const mpz_class& c, FormalSum a) { return a *= c; }
    friend FormalSum operator*(int c, FormalSum a) { return a *= mpz_class(c); }

    friend bool operator==(const FormalSum& a, const FormalSum& b)
    {
        if (a.is_zero() || b.is_zero())
            return a.is_zero() && b.is_zero();
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    template <typename ToJson>
    nlohmann::json to_json(ToJson&& element_json) const
    {
        auto arr = nlohmann::json::array();
        for (const auto& [e, v] : terms_)
            arr.push_back({{"coef", integer_to_json(v)}, {"element", element_json(e)}});
        return {{"arity", arity_}, {"terms", std::move(arr)}};
    }

private:
    std::size_t arity_ = 0;
    Terms terms_;
};

} // namespace opmult
