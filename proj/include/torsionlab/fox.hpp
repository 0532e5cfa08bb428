#ifndef TORSIONLAB_FOX_HPP
#define TORSIONLAB_FOX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace torsionlab {

struct DoubleTwistKnot;

/// Generators of the free group F_2 = <a, b>.
enum class Gen : uint8_t { a = 0, b = 1 };

struct Letter {
    Gen gen;
    int exp; // +1 or -1

    bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
    auto operator<=>(const Letter& o) const = default;
};

/// Freely reduced word in {a, b}. Every constructor and operation returns
/// reduced form, so adjacent cancelling pairs never occur.
class FreeWord {
public:
    FreeWord() = default;

    static FreeWord generator(Gen g, int exp = 1);
    /// Compact letter notation: 'a', 'b' are generators, 'A', 'B' their
    /// inverses; whitespace ignored. E.g. "baBA" or "bA bA".
    static FreeWord parse(const std::string& s);

    bool empty() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    FreeWord operator*(const FreeWord& rhs) const;
    FreeWord operator*(Letter l) const;
    FreeWord inverse() const;
    FreeWord pow(int n) const;

    int exponent_sum() const;
    int exponent_sum(Gen g) const;

    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    auto operator<=>(const FreeWord& o) const = default;

    std::string to_string() const;

private:
    void append_reduced(Letter l);

    std::vector<Letter> letters_;
};

/// Formal integer combination of free-group words (an element of Z[F_2]).
/// Zero coefficients are never stored.
class GroupRingElement {
public:
    GroupRingElement() = default;
    GroupRingElement(const FreeWord& w) : terms_{{w, 1}} {}

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return GroupRingElement(FreeWord()); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<FreeWord, long long>& terms() const { return terms_; }
    long long coeff(const FreeWord& w) const;

    GroupRingElement operator-() const;
    GroupRingElement operator+(const GroupRingElement& rhs) const;
    GroupRingElement operator-(const GroupRingElement& rhs) const;
    GroupRingElement operator*(const GroupRingElement& rhs) const;
    GroupRingElement operator*(long long s) const;

    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void add_term(const FreeWord& w, long long c);

    std::map<FreeWord, long long> terms_;
};

/// Fox free derivative d(word)/d(gen). Satisfies dx/dx = 1, dy/dx = 0,
/// d(x^-1)/dx = -x^-1 and the product rule d(uv)/dx = du/dx + u dv/dx.
GroupRingElement fox_derivative(const FreeWord& word, Gen gen);

/// sigma_l(u) = 1 + u + ... + u^l (word powers). l must be >= 0.
GroupRingElement sigma(const FreeWord& u, int l);
/// Same with ring powers of a general element.
GroupRingElement sigma(const GroupRingElement& u, int l);

/// Closed form of dw/da for the double twist knot's word w; the three-case
/// formula in terms of sigma sums.
GroupRingElement closed_form_dw(const DoubleTwistKnot& knot);

/// Closed form of dr/da for the relator r = w^n a w^-n b^-1, with dw/da
/// substituted from closed_form_dw. Two cases by the sign of n.
GroupRingElement closed_form_dr(const DoubleTwistKnot& knot);

} // namespace torsionlab

#endif
