#include "hilbalg/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace corealg {

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const Scalar& c,
                              bool laurent) {
    MultiPoly p(vars, c.domain(), laurent);
    p.add_term(Exponents(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const Domain& dom,
                              size_t index, bool laurent) {
    if (index >= vars.size()) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(vars, dom, laurent);
    Exponents e(vars.size(), 0);
    e[index] = 1;
    p.add_term(e, Scalar::one(dom));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->first == Exponents(vars_.size(), 0);
}

Scalar MultiPoly::constant_value() const {
    if (terms_.empty()) return Scalar::zero(dom_);
    if (!is_constant()) throw std::invalid_argument("constant_value: polynomial " + str() + " is not constant");
    return terms_.begin()->second;
}

long MultiPoly::degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != vars_.size())
        throw std::invalid_argument("add_term: exponent vector length mismatch");
    if (!laurent_)
        for (int x : e)
            if (x < 0) throw std::invalid_argument("add_term: negative exponent without Laurent flag");
    if (c.domain() != dom_)
        throw std::invalid_argument("add_term: mixed coefficient domains");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(dom_) : it->second;
}

void MultiPoly::check_compatible(const MultiPoly& o, const char* op) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument(std::string(op) + ": mismatched variable lists");
    if (dom_ != o.dom_)
        throw std::invalid_argument(std::string(op) + ": mixed coefficient domains " +
                                    dom_.name() + " and " + o.dom_.name());
    if (laurent_ != o.laurent_)
        throw std::invalid_argument(std::string(op) + ": mixed Laurent flags");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o, "poly+");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o, "poly-");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o, "poly*");
    MultiPoly r(vars_, dom_, laurent_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_, dom_, laurent_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(vars_, dom_, laurent_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly r = constant(vars_, Scalar::one(dom_), laurent_);
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && dom_ == o.dom_ && laurent_ == o.laurent_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::substitute(size_t index, const Scalar& value) const {
    if (index >= vars_.size()) throw std::invalid_argument("substitute: index out of range");
    MultiPoly r(vars_, dom_, laurent_);
    for (const auto& [e, c] : terms_) {
        int k = e[index];
        Scalar factor = Scalar::one(dom_);
        if (k > 0) factor = value.pow(static_cast<unsigned long>(k));
        else if (k < 0) factor = value.inverse().pow(static_cast<unsigned long>(-k));
        Exponents e2 = e;
        e2[index] = 0;
        r.add_term(e2, c * factor);
    }
    return r;
}

MultiPoly MultiPoly::permute_vars(const std::vector<size_t>& perm) const {
    if (perm.size() != vars_.size()) throw std::invalid_argument("permute_vars: bad permutation");
    MultiPoly r(vars_, dom_, laurent_);
    for (const auto& [e, c] : terms_) {
        Exponents e2(e.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) e2[perm[i]] = e[i];
        r.add_term(e2, c);
    }
    return r;
}

MultiPoly MultiPoly::map_domain(const Domain& d) const {
    MultiPoly r(vars_, d, laurent_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.to_domain(d));
    return r;
}

MultiPoly MultiPoly::reindex(const std::vector<std::string>& new_vars,
                             const std::vector<size_t>& slot) const {
    if (slot.size() != vars_.size()) throw std::invalid_argument("reindex: slot size mismatch");
    MultiPoly r(new_vars, dom_, laurent_);
    for (const auto& [e, c] : terms_) {
        Exponents e2(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) e2[slot[i]] = e[i];
        r.add_term(e2, c);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative = false;
        std::string mag = c.str();
        if (!mag.empty() && mag[0] == '-') {
            negative = true;
            mag = mag.substr(1);
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string monos;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += vars_[i];
            if (e[i] != 1) monos += "^" + std::to_string(e[i]);
        }
        if (monos.empty()) {
            out << mag;
        } else if (mag == "1") {
            out << monos;
        } else {
            out << mag << "*" << monos;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& vars;
    const Domain& dom;
    bool laurent;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("MultiPoly::parse: " + why + " at position " +
                                    std::to_string(pos) + " in \"" + s + "\"");
    }

    std::string read_number() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected number");
        std::string num = s.substr(start, pos - start);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            num += "/" + s.substr(dstart, pos - dstart);
        }
        return num;
    }

    int read_exponent() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected exponent");
        return std::stoi(s.substr(start, pos - start));
    }

    // A variable name: longest match against the declared list.
    int read_var() {
        skip_ws();
        int best = -1;
        size_t best_len = 0;
        for (size_t v = 0; v < vars.size(); ++v) {
            const std::string& name = vars[v];
            if (name.size() > best_len && s.compare(pos, name.size(), name) == 0) {
                best = static_cast<int>(v);
                best_len = name.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }

    // term := number | [number *] var[^e] (* var[^e])*
    void read_term(MultiPoly& acc, bool negate) {
        Scalar coeff = Scalar::one(dom);
        Exponents e(vars.size(), 0);
        bool have_any = false;

        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = Scalar::parse(dom, read_number());
            have_any = true;
            if (peek() == '*') ++pos;
        }
        while (true) {
            skip_ws();
            int v = read_var();
            if (v < 0) break;
            have_any = true;
            int exp = 1;
            if (peek() == '^') {
                ++pos;
                exp = read_exponent();
            }
            e[static_cast<size_t>(v)] += exp;
            if (peek() == '*') ++pos;
            else break;
        }
        if (!have_any) fail("expected term");
        acc.add_term(e, negate ? -coeff : coeff);
    }

    MultiPoly run() {
        MultiPoly acc(vars, dom, laurent);
        if (eof()) fail("empty input");
        bool negate = false;
        if (peek() == '-') { negate = true; ++pos; }
        else if (peek() == '+') ++pos;
        read_term(acc, negate);
        while (!eof()) {
            char c = peek();
            if (c == '+') negate = false;
            else if (c == '-') negate = true;
            else fail("expected + or -");
            ++pos;
            read_term(acc, negate);
        }
        return acc;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, const std::vector<std::string>& vars,
                           const Domain& dom, bool laurent) {
    // "0" is the empty term map.
    Parser p{text, 0, vars, dom, laurent};
    return p.run();
}

}  // namespace corealg
