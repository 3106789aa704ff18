#include "hw/weightgen.hpp"

#include <sstream>
#include <stdexcept>

namespace hw {

namespace {

Rat rat_pow(const Rat& x, long e) {
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

/// (x;q)_j = prod_{m=0}^{j-1} (1 - x q^m)
Rat q_pochhammer(const Rat& x, const Rat& q, int j) {
    Rat r = 1, p = x;
    for (int m = 0; m < j; ++m) {
        r *= (1 - p);
        p *= q;
    }
    return r;
}

void require_q_regular(const Rat& q, int D, const char* who) {
    Rat p = q;
    for (int j = 1; j <= D; ++j) {
        if (p == 1)
            throw std::invalid_argument(std::string(who) +
                                        ": q-Pochhammer denominator vanishes (q^" +
                                        std::to_string(j) + " = 1)");
        p *= q;
    }
}

std::vector<Rat> elementary_coeffs(const std::vector<Rat>& c, int D) {
    std::vector<Rat> e(D + 1);
    e[0] = 1;
    for (const Rat& x : c)
        for (int j = D; j >= 1; --j) e[j] += e[j - 1] * x;
    return e;
}

TruncatedSeries base_series(const WeightGenerator& g, int D) {
    TruncatedSeries s(D);
    switch (g.preset) {
        case Preset::Classical:
            return TruncatedSeries(D, elementary_coeffs(g.c, D));
        case Preset::Exp: {
            Rat f = 1;
            for (int i = 0; i <= D; ++i) {
                s.coeff(i) = f;
                f /= (i + 1);
            }
            return s;
        }
        case Preset::E:
            s.coeff(0) = 1;
            if (D >= 1) s.coeff(1) = 1;
            return s;
        case Preset::Ek:
            for (int i = 0; i <= D; ++i) s.coeff(i) = Rat(binomial(g.k, i));
            return s;
        case Preset::H:
            for (int i = 0; i <= D; ++i) s.coeff(i) = 1;
            return s;
        case Preset::Eprime:
        case Preset::Eq:
        case Preset::Hq: {
            require_q_regular(g.q, D, "taylor_coeffs");
            s.coeff(0) = 1;
            Rat poch = 1, qp = g.q;  // (q;q)_i built incrementally
            for (int i = 1; i <= D; ++i) {
                poch *= (1 - qp);
                qp *= g.q;
                Rat num = 1;
                if (g.preset == Preset::Eprime) num = rat_pow(g.q, static_cast<long>(i) * (i + 1) / 2);
                else if (g.preset == Preset::Eq) num = rat_pow(g.q, static_cast<long>(i) * (i - 1) / 2);
                s.coeff(i) = num / poch;
            }
            return s;
        }
        case Preset::Macdonald:
        case Preset::HallLittlewood: {
            // q-binomial theorem: prod_k (1 - t c z q^k)/(1 - c z q^k)
            // = sum_j (t;q)_j / (q;q)_j (cz)^j; Hall-Littlewood is q = 0.
            Rat q = g.preset == Preset::HallLittlewood ? Rat(0) : g.q;
            require_q_regular(q, D, "taylor_coeffs");
            TruncatedSeries prod = TruncatedSeries::one(D);
            for (const Rat& ci : g.c) {
                TruncatedSeries f(D);
                Rat cpow = 1;
                for (int j = 0; j <= D; ++j) {
                    f.coeff(j) = cpow * q_pochhammer(g.t, q, j) / q_pochhammer(q, q, j);
                    cpow *= ci;
                }
                prod = prod * f;
            }
            return prod;
        }
        case Preset::Jack: {
            if (g.alpha == 0) throw std::invalid_argument("taylor_coeffs: Jack alpha = 0");
            // (1 - c z)^{-1/a}: coefficient i = c^i prod_{j<i} (1/a + j) / i!
            TruncatedSeries prod = TruncatedSeries::one(D);
            Rat inv_a = Rat(1) / g.alpha;
            for (const Rat& ci : g.c) {
                TruncatedSeries f(D);
                Rat coef = 1, cpow = 1;
                for (int i = 0; i <= D; ++i) {
                    f.coeff(i) = coef * cpow;
                    coef *= (inv_a + i);
                    coef /= (i + 1);
                    cpow *= ci;
                }
                prod = prod * f;
            }
            return prod;
        }
    }
    throw std::logic_error("base_series: unknown preset");
}

std::vector<Rat> parse_rat_list(std::string_view s) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok =
            comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
        if (!tok.empty()) out.push_back(parse_rational(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

}  // namespace

TruncatedSeries taylor_coeffs(const WeightGenerator& g, int D) {
    TruncatedSeries s = base_series(g, D);
    if (g.dualized) s = s.negate_variable().reciprocal();
    return s;
}

TruncatedSeries dual_series(const WeightGenerator& g, int D) {
    return taylor_coeffs(g.dual(), D);
}

TruncatedSeries content_product_series(const WeightGenerator& g, const Partition& lambda, int D) {
    TruncatedSeries r = TruncatedSeries::one(D);
    TruncatedSeries base = taylor_coeffs(g, D);
    for (int content : lambda.contents()) {
        if (content == 0) continue;  // G(0) = 1
        r = r * base.rescale(Rat(content));
    }
    return r;
}

std::string WeightGenerator::name() const {
    std::ostringstream os;
    if (dualized) os << "dual:";
    auto list = [&] {
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << to_string(c[i]);
    };
    switch (preset) {
        case Preset::Classical: os << "classical:"; list(); break;
        case Preset::Exp: os << "exp"; break;
        case Preset::E: os << "E"; break;
        case Preset::Ek: os << "Ek:" << k; break;
        case Preset::H: os << "H"; break;
        case Preset::Eprime: os << "Eprime:" << to_string(q); break;
        case Preset::Eq: os << "Eq:" << to_string(q); break;
        case Preset::Hq: os << "Hq:" << to_string(q); break;
        case Preset::Macdonald:
            os << "macdonald:" << to_string(q) << ":" << to_string(t) << ":";
            list();
            break;
        case Preset::HallLittlewood: os << "hl:" << to_string(t) << ":"; list(); break;
        case Preset::Jack: os << "jack:" << to_string(alpha) << ":"; list(); break;
    }
    return os.str();
}

WeightGenerator WeightGenerator::parse(std::string_view s) {
    WeightGenerator g;
    if (s.substr(0, 5) == "dual:") {
        g.dualized = true;
        s = s.substr(5);
    }
    auto parts = split(s, ':');
    std::string_view head = parts[0];
    auto expect = [&](std::size_t nargs) {
        if (parts.size() != nargs + 1)
            throw std::invalid_argument("preset " + std::string(head) + ": wrong argument count");
    };
    if (head == "exp") { expect(0); g.preset = Preset::Exp; }
    else if (head == "E") { expect(0); g.preset = Preset::E; }
    else if (head == "H") { expect(0); g.preset = Preset::H; }
    else if (head == "Ek") {
        expect(1);
        g.preset = Preset::Ek;
        g.k = std::stoi(std::string(parts[1]));
        if (g.k <= 0) throw std::invalid_argument("Ek: k must be positive");
    } else if (head == "Eprime" || head == "Eq" || head == "Hq") {
        expect(1);
        g.preset = head == "Eprime" ? Preset::Eprime : head == "Eq" ? Preset::Eq : Preset::Hq;
        g.q = parse_rational(parts[1]);
    } else if (head == "classical") {
        expect(1);
        g.preset = Preset::Classical;
        g.c = parse_rat_list(parts[1]);
    } else if (head == "macdonald") {
        expect(3);
        g.preset = Preset::Macdonald;
        g.q = parse_rational(parts[1]);
        g.t = parse_rational(parts[2]);
        g.c = parse_rat_list(parts[3]);
    } else if (head == "hl") {
        expect(2);
        g.preset = Preset::HallLittlewood;
        g.t = parse_rational(parts[1]);
        g.c = parse_rat_list(parts[2]);
    } else if (head == "jack") {
        expect(2);
        g.preset = Preset::Jack;
        g.alpha = parse_rational(parts[1]);
        g.c = parse_rat_list(parts[2]);
    } else {
        throw std::invalid_argument("unknown preset: " + std::string(s));
    }
    return g;
}

}  // namespace hw
