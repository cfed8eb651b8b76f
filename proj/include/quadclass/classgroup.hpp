#pragma once

// Form class group of an imaginary quadratic field Q(sqrt(-D)).
//
// Classes are represented by reduced positive definite binary quadratic forms
// (a, b, c) of the field discriminant: b^2 - 4ac = disc, a > 0, and
//   |b| <= a <= c,  with b >= 0 whenever |b| = a or a = c.
// One reduced form per class; the principal form (1, b0, c0) is the identity.
// The group operation is classical Gauss composition followed by reduction.
// All discriminants here are fundamental (D squarefree), so every form of the
// discriminant is automatically primitive.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "quadclass/arith.hpp"

namespace quadclass {

/// A negative fundamental discriminant. Construction rejects anything else.
class Discriminant {
public:
    explicit Discriminant(Integer value) : value_(std::move(value)) {
        if (value_ >= 0) throw std::domain_error("Discriminant: value must be negative");
        const int r = detail::mod4(value_);
        if (r == 1) {
            if (!is_squarefree(-value_))
                throw std::domain_error("Discriminant: not fundamental");
        } else if (r == 0) {
            const Integer m = value_ / 4;
            const int rm = detail::mod4(m);
            if ((rm != 2 && rm != 3) || !is_squarefree(-m))
                throw std::domain_error("Discriminant: not fundamental");
        } else {
            throw std::domain_error("Discriminant: value must be 0 or 1 mod 4");
        }
    }

    const Integer& value() const { return value_; }

    friend bool operator==(const Discriminant&, const Discriminant&) = default;

private:
    Integer value_;
};

/// Field discriminant of Q(sqrt(-D)) for squarefree D >= 1:
/// -D when D = 3 (mod 4), otherwise -4D.
inline Discriminant discriminant_of(const Integer& D) {
    if (D < 1 || !is_squarefree(D))
        throw std::domain_error("discriminant_of: D must be a squarefree positive integer");
    return Discriminant(D % 4 == 3 ? Integer(-D) : Integer(-4 * D));
}

/// Positive definite binary quadratic form ax^2 + bxy + cy^2 of a fixed
/// fundamental discriminant.
class QuadForm {
public:
    QuadForm(Integer a, Integer b, Integer c, Discriminant disc)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), disc_(std::move(disc)) {
        if (a_ <= 0 || c_ <= 0) throw std::domain_error("QuadForm: not positive definite");
        if (b_ * b_ - 4 * a_ * c_ != disc_.value())
            throw std::domain_error("QuadForm: wrong discriminant");
    }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Discriminant& disc() const { return disc_; }

    bool is_reduced() const {
        using boost::multiprecision::abs;
        if (abs(b_) > a_ || a_ > c_) return false;
        if ((abs(b_) == a_ || a_ == c_) && b_ < 0) return false;
        return true;
    }

    friend bool operator==(const QuadForm&, const QuadForm&) = default;

    // plain (a, b, c) lexicographic order, used for map keys
    friend bool operator<(const QuadForm& f, const QuadForm& g) {
        return std::tie(f.a_, f.b_, f.c_) < std::tie(g.a_, g.b_, g.c_);
    }

private:
    Integer a_, b_, c_;
    Discriminant disc_;
};

/// Identity class: (1, 0, |d|/4) for even discriminant, (1, 1, (1+|d|)/4) for odd.
inline QuadForm principal_form(const Discriminant& disc) {
    const Integer b0 = detail::mod4(disc.value()) == 0 ? 0 : 1;
    return QuadForm(1, b0, (b0 * b0 - disc.value()) / 4, disc);
}

/// The unique reduced form equivalent to f. Idempotent.
inline QuadForm reduce(const QuadForm& f) {
    const Integer& d = f.disc().value();
    Integer a = f.a(), b = f.b(), c = f.c();
    auto normalize = [&] {
        // b into (-a, a], c from the discriminant
        const Integer two_a = a << 1;
        Integer r = b % two_a;
        if (r < 0) r += two_a;
        if (r > a) r -= two_a;
        b = r;
        c = (b * b - d) / (a << 2);
    };
    normalize();
    while (a > c) {
        std::swap(a, c);
        b = -b;
        normalize();
    }
    if (a == c && b < 0) b = -b;
    return QuadForm(a, b, c, f.disc());
}

/// Gauss composition of two form classes, returned reduced. Commutative on
/// classes; the principal form is the identity.
inline QuadForm compose(const QuadForm& f, const QuadForm& g) {
    if (!(f.disc() == g.disc())) throw std::domain_error("compose: discriminant mismatch");
    Integer a1 = f.a(), b1 = f.b(), c1 = f.c();
    Integer a2 = g.a(), b2 = g.b(), c2 = g.c();
    if (a1 > a2) {
        std::swap(a1, a2);
        std::swap(b1, b2);
        std::swap(c1, c2);
    }
    const Integer s = (b1 + b2) / 2;  // b1, b2 share the discriminant's parity
    const Integer n = b2 - s;
    Integer y1, d;
    if (a2 % a1 == 0) {
        y1 = 0;
        d = a1;
    } else {
        Integer u, v;
        d = detail::ext_gcd(a2, a1, u, v);
        y1 = u;
    }
    Integer x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        Integer u, v;
        d1 = detail::ext_gcd(s, d, u, v);
        x2 = u;
        y2 = -v;
    }
    const Integer v1 = a1 / d1;
    const Integer v2 = a2 / d1;
    Integer r = (y1 * y2 * n - x2 * c2) % v1;
    if (r < 0) r += v1;
    const Integer a3 = v1 * v2;
    const Integer b3 = b2 + 2 * v2 * r;
    const Integer c3 = (c2 * d1 + r * (b2 + v2 * r)) / v1;  // exact
    return reduce(QuadForm(a3, b3, c3, f.disc()));
}

/// All reduced forms of the discriminant, one per class. Enumerates b with
/// 3b^2 <= |disc| and splits (b^2 - disc)/4 into divisor pairs a <= c, which
/// yields exactly the reduced triples. Ordered by (a, |b|, sign), positive b
/// before negative.
inline std::vector<QuadForm> enumerate_reduced_forms(const Discriminant& disc) {
    const Integer& d = disc.value();
    const Integer bound = -d;
    std::vector<QuadForm> out;
    for (Integer b = detail::mod4(d) == 0 ? 0 : 1; 3 * b * b <= bound; b += 2) {
        const Integer m = (b * b - d) / 4;  // = a*c for reduced candidates
        for (Integer a = b > 1 ? b : Integer(1); a * a <= m; ++a) {
            if (m % a != 0) continue;
            const Integer c = m / a;
            out.emplace_back(a, b, c, disc);
            if (b > 0 && b < a && a < c) out.emplace_back(a, -b, c, disc);
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadForm& f, const QuadForm& g) {
        using boost::multiprecision::abs;
        return std::make_tuple(f.a(), Integer(abs(f.b())), Integer(-f.b())) <
               std::make_tuple(g.a(), Integer(abs(g.b())), Integer(-g.b()));
    });
    return out;
}

/// Least k >= 1 with f^k principal (iterated composition). Divides h.
inline Integer form_order(const QuadForm& f) {
    const QuadForm one = principal_form(f.disc());
    QuadForm g = reduce(f);
    Integer k = 1;
    while (!(g == one)) {
        g = compose(g, f);
        ++k;
        if (k > Integer(1) << 40) throw std::logic_error("form_order: runaway iteration");
    }
    return k;
}

/// Class number, group exponent and the multiset of class orders.
struct ClassGroupSummary {
    Discriminant disc;
    Integer h;
    Integer exponent;
    std::vector<Integer> orders;  // ascending, one entry per class
};

/// Full class group data for Q(sqrt(-D)), D squarefree positive. Orders are
/// obtained by walking each cyclic orbit once: when f has order k, the power
/// f^j picked up along the way has order k / gcd(j, k).
inline ClassGroupSummary class_group(const Integer& D) {
    const Discriminant disc = discriminant_of(D);
    const std::vector<QuadForm> forms = enumerate_reduced_forms(disc);
    const QuadForm one = principal_form(disc);
    std::map<QuadForm, Integer> order_of;
    for (const QuadForm& f : forms) {
        if (order_of.contains(f)) continue;
        std::vector<QuadForm> orbit{f};
        QuadForm g = f;
        while (!(g == one)) {
            g = compose(g, f);
            orbit.push_back(g);
        }
        const Integer k = orbit.size();
        for (std::size_t j = 1; j <= orbit.size(); ++j) {
            const Integer ord = k / boost::multiprecision::gcd(Integer(j), k);
            order_of.emplace(orbit[j - 1], ord);
        }
    }
    ClassGroupSummary out{disc, Integer(forms.size()), 1, {}};
    out.orders.reserve(forms.size());
    for (const QuadForm& f : forms) out.orders.push_back(order_of.at(f));
    std::sort(out.orders.begin(), out.orders.end());
    for (const Integer& ord : out.orders)
        out.exponent = boost::multiprecision::lcm(out.exponent, ord);
    return out;
}

/// True iff the class group of Q(sqrt(-D)) has an element of order n, i.e.
/// n divides the group exponent (finite abelian groups realize every divisor
/// of the exponent as an element order).
inline bool has_element_of_order(const Integer& D, const Integer& n) {
    if (n < 1) throw std::domain_error("has_element_of_order: n must be >= 1");
    return class_group(D).exponent % n == 0;
}

}  // namespace quadclass
