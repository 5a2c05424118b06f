#include "sturm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sturm {

namespace {

void require_same_size(const Permutation& f, const Permutation& g, const char* who) {
    if (f.size() != g.size()) {
        throw std::domain_error(std::string(who) + ": permutations of different sizes " + std::to_string(f.size()) +
                                " and " + std::to_string(g.size()));
    }
}

std::vector<unsigned> parse_unsigned_list(std::string_view text) {
    std::vector<unsigned> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        if (token.size() > 9) throw std::invalid_argument("element too large: " + token);
        out.push_back(static_cast<unsigned>(std::stoul(token)));
        token.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) token.push_back(c);
        else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
        else throw std::invalid_argument("unexpected character '" + std::string(1, c) + "'");
    }
    flush();
    return out;
}

}  // namespace

Permutation::Permutation(unsigned n) : images_(n) { std::iota(images_.begin(), images_.end(), 1u); }

Permutation Permutation::from_images(std::vector<unsigned> images) {
    std::vector<bool> seen(images.size() + 1, false);
    for (unsigned v : images) {
        if (v < 1 || v > images.size() || seen[v]) throw std::domain_error("images do not form a bijection of {1..n}");
        seen[v] = true;
    }
    Permutation f;
    f.images_ = std::move(images);
    return f;
}

Permutation Permutation::from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
    Permutation result(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& cyc = *it;
        std::vector<bool> seen(n + 1, false);
        std::vector<unsigned> img(n);
        std::iota(img.begin(), img.end(), 1u);
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            unsigned a = cyc[k];
            if (a < 1 || a > n || seen[a]) throw std::domain_error("invalid cycle element " + std::to_string(a));
            seen[a] = true;
            img[a - 1] = cyc[(k + 1) % cyc.size()];
        }
        result = compose(from_images(std::move(img)), result);
    }
    return result;
}

bool Permutation::is_identity() const {
    for (unsigned k = 0; k < images_.size(); ++k)
        if (images_[k] != k + 1) return false;
    return true;
}

CycleType::CycleType(std::vector<unsigned> l) : lengths(std::move(l)) {
    for (unsigned v : lengths)
        if (v == 0) throw std::domain_error("cycle lengths must be >= 1");
    std::sort(lengths.begin(), lengths.end());
}

unsigned CycleType::total() const { return std::accumulate(lengths.begin(), lengths.end(), 0u); }

std::string CycleType::to_string() const {
    std::string out = "<";
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(lengths[k]);
    }
    return out + ">";
}

Permutation compose(const Permutation& f, const Permutation& g) {
    require_same_size(f, g, "compose");
    std::vector<unsigned> img(f.size());
    for (unsigned x = 1; x <= f.size(); ++x) img[x - 1] = f(g(x));
    return Permutation::from_images(std::move(img));
}

Permutation inverse(const Permutation& f) {
    std::vector<unsigned> img(f.size());
    for (unsigned x = 1; x <= f.size(); ++x) img[f(x) - 1] = x;
    return Permutation::from_images(std::move(img));
}

Permutation power(const Permutation& f, long long k) {
    Permutation base = k < 0 ? inverse(f) : f;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
    Permutation result(f.size());
    while (e > 0) {
        if (e & 1) result = compose(result, base);
        base = compose(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<std::vector<unsigned>> cycle_decomposition(const Permutation& f) {
    std::vector<std::vector<unsigned>> cycles;
    std::vector<bool> seen(f.size() + 1, false);
    for (unsigned start = 1; start <= f.size(); ++start) {
        if (seen[start]) continue;
        std::vector<unsigned> cyc;
        for (unsigned x = start; !seen[x]; x = f(x)) {
            seen[x] = true;
            cyc.push_back(x);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

CycleType cycle_type(const Permutation& f) {
    std::vector<unsigned> lengths;
    for (const auto& c : cycle_decomposition(f)) lengths.push_back(static_cast<unsigned>(c.size()));
    return CycleType(std::move(lengths));
}

unsigned cycle_count(const Permutation& f) { return static_cast<unsigned>(cycle_decomposition(f).size()); }

Integer order(const Permutation& f) {
    Integer result = 1;
    for (unsigned len : cycle_type(f).lengths) result = lcm(result, Integer(len));
    return result;
}

bool are_conjugate(const Permutation& a, const Permutation& b) {
    require_same_size(a, b, "are_conjugate");
    return cycle_type(a) == cycle_type(b);
}

Permutation conjugate_by(const Permutation& a, const Permutation& x) {
    require_same_size(a, x, "conjugate_by");
    return compose(compose(x, a), inverse(x));
}

Integer count_of_type(unsigned n, const CycleType& t) {
    if (t.total() != n) {
        throw std::domain_error("cycle type " + t.to_string() + " does not sum to " + std::to_string(n));
    }
    std::map<unsigned, unsigned> multiplicity;
    Integer denom = 1;
    for (unsigned len : t.lengths) {
        denom *= len;
        ++multiplicity[len];
    }
    for (auto [len, m] : multiplicity) denom *= factorial(m);
    return factorial(n) / denom;
}

Parity parity(const Permutation& f) {
    return (f.size() - cycle_count(f)) % 2 == 0 ? Parity::even : Parity::odd;
}

std::string to_cycle_string(const Permutation& f, bool with_fixed_points) {
    std::string out;
    for (const auto& cyc : cycle_decomposition(f)) {
        if (cyc.size() == 1 && !with_fixed_points) continue;
        out += "(";
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (k > 0) out += " ";
            out += std::to_string(cyc[k]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, unsigned n) {
    std::vector<std::vector<unsigned>> cycles;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    if (i == text.size()) throw std::invalid_argument("empty permutation text");
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in '" + std::string(text) + "'");
        std::size_t close = text.find(')', i);
        if (close == std::string_view::npos) throw std::invalid_argument("unbalanced '(' in '" + std::string(text) + "'");
        auto elems = parse_unsigned_list(text.substr(i + 1, close - i - 1));
        for (unsigned e : elems) {
            if (e == 0) throw std::invalid_argument("permutation elements are 1-based");
            n = std::max(n, e);
        }
        if (!elems.empty()) cycles.push_back(std::move(elems));
        i = close + 1;
        skip_space();
    }
    try {
        return Permutation::from_cycles(n, cycles);
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(std::string("bad cycle notation: ") + e.what());
    }
}

CycleType parse_cycle_type(std::string_view text) {
    std::string body(text);
    if (!body.empty() && body.front() == '<') body.erase(body.begin());
    if (!body.empty() && body.back() == '>') body.pop_back();
    auto lengths = parse_unsigned_list(body);
    if (lengths.empty()) throw std::invalid_argument("empty cycle type");
    for (unsigned v : lengths)
        if (v == 0) throw std::invalid_argument("cycle lengths must be >= 1");
    return CycleType(std::move(lengths));
}

}  // namespace sturm
