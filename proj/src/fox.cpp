#include "torsionlab/fox.hpp"

#include <sstream>
#include <stdexcept>

#include "torsionlab/knots.hpp"

namespace torsionlab {

FreeWord FreeWord::generator(Gen g, int exp) {
    if (exp != 1 && exp != -1) throw std::invalid_argument("FreeWord::generator: exp must be +-1");
    FreeWord w;
    w.letters_.push_back({g, exp});
    return w;
}

FreeWord FreeWord::parse(const std::string& s) {
    FreeWord w;
    for (char ch : s) {
        switch (ch) {
            case 'a': w.append_reduced({Gen::a, 1}); break;
            case 'A': w.append_reduced({Gen::a, -1}); break;
            case 'b': w.append_reduced({Gen::b, 1}); break;
            case 'B': w.append_reduced({Gen::b, -1}); break;
            case ' ':
            case '\t': break;
            default: throw std::invalid_argument("FreeWord::parse: unexpected character");
        }
    }
    return w;
}

void FreeWord::append_reduced(Letter l) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
        letters_.pop_back();
    else
        letters_.push_back(l);
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    FreeWord out(*this);
    for (Letter l : rhs.letters_) out.append_reduced(l);
    return out;
}

FreeWord FreeWord::operator*(Letter l) const {
    FreeWord out(*this);
    out.append_reduced(l);
    return out;
}

FreeWord FreeWord::inverse() const {
    FreeWord out;
    out.letters_.reserve(letters_.size());
    for (size_t i = letters_.size(); i-- > 0;)
        out.letters_.push_back({letters_[i].gen, -letters_[i].exp});
    return out;
}

FreeWord FreeWord::pow(int n) const {
    FreeWord base = n < 0 ? inverse() : *this;
    int reps = n < 0 ? -n : n;
    FreeWord out;
    for (int i = 0; i < reps; ++i) out = out * base;
    return out;
}

int FreeWord::exponent_sum() const {
    int s = 0;
    for (Letter l : letters_) s += l.exp;
    return s;
}

int FreeWord::exponent_sum(Gen g) const {
    int s = 0;
    for (Letter l : letters_)
        if (l.gen == g) s += l.exp;
    return s;
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (Letter l : letters_) {
        char c = l.gen == Gen::a ? 'a' : 'b';
        s += l.exp > 0 ? c : static_cast<char>(c - 'a' + 'A');
    }
    return s;
}

long long GroupRingElement::coeff(const FreeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void GroupRingElement::add_term(const FreeWord& w, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r(*this);
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
    GroupRingElement r(*this);
    for (const auto& [w, c] : rhs.terms_) r.add_term(w, c);
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
    GroupRingElement r(*this);
    for (const auto& [w, c] : rhs.terms_) r.add_term(w, -c);
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
    GroupRingElement r;
    for (const auto& [u, cu] : terms_)
        for (const auto& [v, cv] : rhs.terms_) r.add_term(u * v, cu * cv);
    return r;
}

GroupRingElement GroupRingElement::operator*(long long s) const {
    GroupRingElement r;
    if (s == 0) return r;
    for (const auto& [w, c] : terms_) r.terms_[w] = c * s;
    return r;
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        long long a = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || w.empty()) os << a;
        if (!w.empty()) os << w.to_string();
    }
    return os.str();
}

GroupRingElement fox_derivative(const FreeWord& word, Gen gen) {
    GroupRingElement d;
    FreeWord prefix;
    for (Letter l : word.letters()) {
        if (l.gen == gen) {
            if (l.exp > 0)
                d = d + GroupRingElement(prefix);
            else
                d = d - GroupRingElement(prefix * Letter{gen, -1});
        }
        prefix = prefix * l;
    }
    return d;
}

GroupRingElement sigma(const FreeWord& u, int l) {
    if (l < 0) throw std::invalid_argument("sigma: l must be >= 0");
    GroupRingElement s;
    FreeWord p;
    for (int i = 0; i <= l; ++i) {
        s = s + GroupRingElement(p);
        p = p * u;
    }
    return s;
}

GroupRingElement sigma(const GroupRingElement& u, int l) {
    if (l < 0) throw std::invalid_argument("sigma: l must be >= 0");
    GroupRingElement s;
    GroupRingElement p = GroupRingElement::one();
    for (int i = 0; i <= l; ++i) {
        s = s + p;
        p = p * u;
    }
    return s;
}

GroupRingElement closed_form_dw(const DoubleTwistKnot& knot) {
    const FreeWord ba_inv = FreeWord::parse("bA");
    const FreeWord ab_inv = FreeWord::parse("aB");
    const GroupRingElement b(FreeWord::parse("b"));
    const int m = knot.m;
    if (knot.k == 1) return b;
    GroupRingElement first = -(GroupRingElement(ba_inv) * sigma(ba_inv, m - 1));
    if (knot.k % 2 == 0) {
        GroupRingElement second =
            GroupRingElement(ba_inv.pow(m) * FreeWord::parse("B")) * sigma(ab_inv, m - 1);
        return first + second;
    }
    GroupRingElement second = GroupRingElement(ba_inv.pow(m) * FreeWord::parse("b")) * sigma(ab_inv, m);
    return first + second;
}

GroupRingElement closed_form_dr(const DoubleTwistKnot& knot) {
    const FreeWord w = word_w(knot);
    const GroupRingElement dw = closed_form_dw(knot);
    const GroupRingElement one = GroupRingElement::one();
    const GroupRingElement one_minus_a = one - GroupRingElement(FreeWord::parse("a"));
    const int n = knot.n;
    if (n >= 1) {
        GroupRingElement inner =
            one + one_minus_a * GroupRingElement(w.pow(-n)) * sigma(w, n - 1) * dw;
        return GroupRingElement(w.pow(n)) * inner;
    }
    GroupRingElement inner = one - one_minus_a * sigma(w, -n - 1) * dw;
    return GroupRingElement(w.pow(n)) * inner;
}

} // namespace torsionlab
