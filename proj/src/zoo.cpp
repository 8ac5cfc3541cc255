// Copyright 2026 The sectorlens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sectorlens/zoo.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace sectorlens {

namespace {

using Terms = std::vector<std::pair<Complex, std::string>>;

Eigen::VectorXcd kets(int n, const Terms& terms, Complex scale) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    for (const auto& [c, bits] : terms) {
        if (static_cast<int>(bits.size()) != n) {
            throw contract_error("basis label '" + bits + "' has wrong length");
        }
        v[static_cast<Eigen::Index>(std::stoull(bits, nullptr, 2))] += c * scale;
    }
    return v;
}

// "+0101 -1100" -> signed terms.
Terms signed_terms(const std::string& text) {
    Terms out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        out.emplace_back(tok[0] == '-' ? -1.0 : 1.0, tok.substr(1));
    }
    return out;
}

Eigen::VectorXcd dicke_vector(int n, int a) {
    if (a < 0 || a > n) {
        throw contract_error("Dicke excitation count must be in 0.." + std::to_string(n));
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, a)));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::popcount(static_cast<std::uint64_t>(i)) == a) v[i] = amp;
    }
    return v;
}

// Places two 4-qubit factors onto the labels in `order` (first four labels get
// the left factor).
Eigen::VectorXcd grouped8(const std::vector<int>& order,
                          const std::vector<std::pair<std::string, std::string>>& groups,
                          double scale) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(256);
    for (const auto& [left, right] : groups) {
        for (const auto& [ca, sa] : signed_terms(left)) {
            for (const auto& [cb, sb] : signed_terms(right)) {
                std::uint64_t index = 0;
                for (int i = 0; i < 4; ++i) {
                    if (sa[i] == '1') index |= qubit_bit(order[i], 8);
                    if (sb[i] == '1') index |= qubit_bit(order[4 + i], 8);
                }
                v[static_cast<Eigen::Index>(index)] += ca * cb * scale;
            }
        }
    }
    return v;
}

Eigen::VectorXcd graph_state(int n, const std::vector<std::pair<int, int>>& edges) {
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    const double amp = 1.0 / std::sqrt(std::ldexp(1.0, n));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        int parity = 0;
        for (auto [a, b] : edges) {
            const auto ia = static_cast<std::uint64_t>(i) & qubit_bit(a, n);
            const auto ib = static_cast<std::uint64_t>(i) & qubit_bit(b, n);
            parity ^= (ia && ib) ? 1 : 0;
        }
        v[i] = parity ? -amp : amp;
    }
    return v;
}

RVec sectors_from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<Rational> vals{Rational(1)};
    std::string tok;
    while (in >> tok) vals.emplace_back(tok);
    RVec out(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) out[static_cast<Eigen::Index>(i)] = vals[i];
    return out;
}

Eigen::VectorXcd tetra_vector() {
    const Complex i(0.0, 1.0);
    return 0.5 * (dicke_vector(4, 0) + i * std::sqrt(2.0) * dicke_vector(4, 2) + dicke_vector(4, 4));
}

Eigen::VectorXcd psi5_vector() {
    return kets(5, signed_terms("+00000 +00011 -00101 +00110 +10000 +10011 +10101 -10110"),
                1.0 / std::sqrt(8.0));
}

ZooEntry make_entry(std::string name, int n, std::string description, const char* sectors,
                    Provenance provenance, int uniform, std::function<Eigen::VectorXcd()> amplitudes) {
    ZooEntry e;
    e.name = std::move(name);
    e.n_qubits = n;
    e.description = std::move(description);
    if (sectors != nullptr) e.expected = sectors_from_text(sectors);
    e.provenance = provenance;
    e.claimed_uniformity = uniform;
    e.amplitudes = std::move(amplitudes);
    return e;
}

std::vector<ZooEntry> make_catalog() {
    std::vector<ZooEntry> cat;
    const double s2 = std::sqrt(2.0);

    cat.push_back(make_entry("tetra", 4, "symmetric tetrahedron state", "0 2 8 5",
                             Provenance::published, 0, tetra_vector));
    cat.back().spectra.push_back({2, {{-1, {1.0 / 3, 1.0 / 3, 1.0 / 3}}}});

    cat.push_back(make_entry("AME(5,2)", 5, "2-uniform five-qubit code state", "0 0 10 15 6",
                             Provenance::published, 2, [] {
                                 return kets(5,
                                             signed_terms("+00000 +00011 +01101 +01110 +10101 "
                                                          "-10110 +11000 -11011"),
                                             1.0 / std::sqrt(8.0));
                             }));

    cat.push_back(make_entry("psi5", 5, "five-qubit state seeding the right boundary family",
                             "1 2 10 13 5", Provenance::published, 0, psi5_vector));

    // Wheel graph: 5-cycle on labels 1..5 with hub 6.
    cat.push_back(make_entry("AME(6,2)", 6, "absolutely maximally entangled six-qubit state (wheel graph)",
                             "0 0 0 45 0 18", Provenance::published, 2, [] {
                                 return graph_state(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                                                        {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}});
                             }));

    cat.push_back(make_entry(
        "AME(6,2)-printed", 6, "published 25-term amplitude list for the six-qubit AME state",
        "0 0 0 45 0 18", Provenance::published, 2, [] {
            return kets(6,
                        signed_terms("+000000 +000011 +000101 +000110 +001001 -001010 -001100 "
                                     "+001111 +010001 +010100 -010111 +011000 -011011 +011101 "
                                     "-011111 -100001 -100100 +100111 +101000 +101011 +101110 "
                                     "+110000 +110011 +110101 +111000"),
                        0.2);
        }));
    cat.back().discrepancy =
        "printed amplitudes do not give the listed sector vector; AME(6,2) is the wheel graph state";

    cat.push_back(make_entry("psi6", 6, "2-uniform six-qubit state", "0 0 8 21 24 10",
                             Provenance::published, 2, [] {
                                 return kets(6,
                                             signed_terms("+000000 +000111 +001110 +010101 +100100 "
                                                          "+110001 +110110 +111111 -001001 -010010 "
                                                          "-011011 -011100 -100011 -101010 -101101 "
                                                          "-111000"),
                                             0.25);
                             }));
    cat.back().spectra.push_back({3, {{12, std::vector<double>(8, 0.125)},
                                      {8, std::vector<double>(4, 0.25)}}});

    cat.push_back(make_entry("pyramid", 6, "1-uniform symmetric six-qubit state",
                             "0 27/5 8 51/5 24 77/5", Provenance::published, 1, [] {
                                 return Eigen::VectorXcd(-0.5 * dicke_vector(6, 0) +
                                                         std::sqrt(3.0) / 2 * dicke_vector(6, 4));
                             }));

    cat.push_back(make_entry("psi7", 7, "1-uniform symmetric seven-qubit state", "0 7 14 7 28 49 22",
                             Provenance::published, 1, [] {
                                 return Eigen::VectorXcd((2 * std::sqrt(2.0) * dicke_vector(7, 0) +
                                                          std::sqrt(14.0) * dicke_vector(7, 3) +
                                                          std::sqrt(14.0) * dicke_vector(7, 6)) /
                                                         6.0);
                             }));
    cat.back().spectra.push_back({2, {{-1, {1.0 / 3, 1.0 / 3, 1.0 / 3}}}});
    cat.back().spectra.push_back({3, {{-1, {0.1, 0.2, 0.3, 0.4}}}});

    cat.push_back(make_entry(
        "psiM7", 7, "2-uniform seven-qubit state", "0 0 3 29 42 34 19", Provenance::published, 2, [s2] {
            return kets(7,
                        signed_terms("+0000000 +0000011 +0001101 +0001110 +0010001 -0010010 "
                                     "+0011100 -0011111 -0100101 -0100110 +0101000 +0101011 "
                                     "+0110100 -0110111 -0111001 +0111010 -1000100 -1000111 "
                                     "+1001001 +1001010 +1010101 -1010110 -1011000 +1011011 "
                                     "+1100001 +1100010 +1101100 +1101111 +1110000 -1110011 "
                                     "+1111101 -1111110"),
                        1.0 / (4 * s2));
        }));
    cat.back().spectra.push_back({3, {{32, std::vector<double>(8, 0.125)},
                                      {3, std::vector<double>(4, 0.25)}}});

    cat.push_back(make_entry(
        "psi7b", 7, "seven-qubit state with phases in powers of exp(i pi/3)",
        "25/13 9/13 125/13 35 603/13 355/13 79/13", Provenance::published, 0, [] {
            const Complex w = std::polar(1.0, std::numbers::pi / 3);
            const double r = std::sqrt(1.5);
            return kets(7,
                        {{r, "0000001"},
                         {-r, "0000100"},
                         {1.0, "0001010"},
                         {1.0, "0101000"},
                         {1.0, "0110000"},
                         {1.0, "0011000"},
                         {w, "1100000"},
                         {w * w, "0010010"},
                         {std::pow(w, 3), "1010000"},
                         {std::pow(w, 4), "0100010"},
                         {std::pow(w, 5), "1000010"},
                         {std::pow(w, 5), "1001000"}},
                        1.0 / std::sqrt(13.0));
        }));

    cat.push_back(make_entry("psiM8", 8, "3-uniform eight-qubit state", "0 0 0 26 64 72 64 29",
                             Provenance::published, 3, [] {
                                 return grouped8({1, 2, 7, 8, 3, 4, 5, 6},
                                                 {{"+0000 +0011 -1101 +1110", "+0000 +0111 -1001 +1110"},
                                                  {"-0001 +0010 +1100 +1111", "+0001 +0110 +1000 -1111"},
                                                  {"+0100 -0111 +1001 +1010", "-0011 +0100 +1010 +1101"},
                                                  {"+0101 +0110 +1000 -1011", "-0010 +0101 -1011 -1100"}},
                                                 0.125);
                             }));

    cat.push_back(make_entry("tetra8", 8, "symmetric eight-qubit state with doubled tetrahedral stars",
                             "0 28/3 144/7 310/21 160/7 1396/21 592/7 255/7", Provenance::computed, 2,
                             [] {
                                 return Eigen::VectorXcd((std::sqrt(7.0) * dicke_vector(8, 0) +
                                                          2.0 * dicke_vector(8, 3) +
                                                          4.0 * dicke_vector(8, 6)) /
                                                         (3 * std::sqrt(3.0)));
                             }));
    cat.back().printed = "0 0 3 29 42 34 19";
    cat.back().discrepancy =
        "published vector has 7 entries summing to 127 (a copy of psiM7's); the computed vector "
        "is used; the state is 1-uniform, not 2-uniform";

    cat.push_back(make_entry("tetra^2", 8, "two copies of the tetrahedron state", "0 4 16 14 32 84 80 25",
                             Provenance::published, 0, [] {
                                 const Eigen::VectorXcd t = tetra_vector();
                                 return tensor(PureState(4, t), PureState(4, t)).amplitudes();
                             }));

    cat.push_back(make_entry("psi1_8", 8, "3-uniform eight-qubit state with vanishing odd sectors",
                             "0 0 0 42 0 168 0 45", Provenance::published, 3, [s2] {
                                 return grouped8({1, 2, 5, 6, 3, 4, 7, 8},
                                                 {{"+0000 +1111", "+0000 +0011 +1100 +1111"},
                                                  {"+0011 +1100", "+0110 +0101 +1010 +1001"},
                                                  {"+0101 +1010", "+0110 -0101 -1010 +1001"},
                                                  {"+0110 +1001", "+0000 -0011 -1100 +1111"}},
                                                 1.0 / (4 * s2));
                             }));
    return cat;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

class NumberParser {
   public:
    explicit NumberParser(const std::string& text) : s_(text) {}

    double parse() {
        const double v = expr();
        skip();
        if (pos_ != s_.size()) fail();
        return v;
    }

   private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool eat_word(const char* w) {
        skip();
        const std::size_t len = std::char_traits<char>::length(w);
        if (s_.compare(pos_, len, w) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() const { throw contract_error("cannot parse number '" + s_ + "'"); }

    double expr() {
        double v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    double term() {
        double v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }
    double unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return primary();
    }
    double primary() {
        if (eat('(')) {
            const double v = expr();
            if (!eat(')')) fail();
            return v;
        }
        if (eat_word("pi")) return std::numbers::pi;
        if (eat_word("sqrt")) {
            if (!eat('(')) fail();
            const double v = expr();
            if (!eat(')')) fail();
            return std::sqrt(v);
        }
        skip();
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail();
        pos_ += static_cast<std::size_t>(end - begin);
        return v;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_args(const std::string& text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

int int_arg(const std::string& text, const std::string& what) {
    const double v = eval_number(text);
    if (v != std::floor(v) || std::abs(v) > 1e6) {
        throw contract_error(what + " must be an integer, got '" + text + "'");
    }
    return static_cast<int>(v);
}

void require_args(const std::string& name, const std::vector<std::string>& args, std::size_t lo,
                  std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
        throw contract_error(name + " takes " + std::to_string(lo) +
                             (lo == hi ? "" : ".." + std::to_string(hi)) + " arguments");
    }
}

void require_range(const std::string& what, double v, double lo, double hi) {
    if (!(v >= lo - 1e-12 && v <= hi + 1e-12)) {
        std::ostringstream msg;
        msg << what << " = " << v << " outside [" << lo << ", " << hi << "]";
        throw contract_error(msg.str());
    }
}

PureState build_family(const std::string& name, const std::vector<std::string>& args) {
    std::vector<double> p;
    if (name == "GHZ") {
        require_args(name, args, 1, 2);
        const int n = int_arg(args[0], "GHZ qubit count");
        return args.size() == 2 ? ghz(n, eval_number(args[1])) : ghz(n);
    }
    if (name == "Dicke") {
        require_args(name, args, 2, 2);
        return dicke(int_arg(args[0], "Dicke qubit count"), int_arg(args[1], "Dicke excitation count"));
    }
    if (name == "zero") {
        require_args(name, args, 1, 1);
        return zero_state(int_arg(args[0], "qubit count"));
    }
    if (name == "haar") {
        require_args(name, args, 2, 2);
        std::mt19937_64 rng(static_cast<std::uint64_t>(int_arg(args[1], "seed")));
        return haar_random(int_arg(args[0], "qubit count"), rng);
    }
    for (const auto& a : args) p.push_back(eval_number(a));
    if (name == "psi4") {
        require_args(name, args, 2, 2);
        return psi4_family(p[0], p[1]);
    }
    if (name == "boundary") {
        require_args(name, args, 3, 3);
        return boundary_family(p[0], p[1], p[2]);
    }
    if (name == "psi_eta") {
        require_args(name, args, 1, 1);
        return psi_eta_family(p[0]);
    }
    if (name == "phi_eta") {
        require_args(name, args, 1, 1);
        return phi_eta_family(p[0]);
    }
    throw contract_error("unknown state '" + name + "'");
}

class StateParser {
   public:
    explicit StateParser(std::string text) {
        for (char c : text) {
            if (c != '|' && c != '>' && !std::isspace(static_cast<unsigned char>(c))) s_ += c;
        }
    }

    PureState parse() {
        if (s_.empty()) throw contract_error("empty state expression");
        PureState acc = factor();
        while (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            acc = tensor(acc, factor());
        }
        if (pos_ != s_.size()) {
            throw contract_error("unexpected '" + s_.substr(pos_) + "' in state expression");
        }
        return acc;
    }

   private:
    PureState factor() {
        PureState base = atom();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            std::size_t end = pos_;
            while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
            if (end == pos_) throw contract_error("expected integer after '^'");
            const int k = std::stoi(s_.substr(pos_, end - pos_));
            pos_ = end;
            if (k < 1) throw contract_error("tensor power must be >= 1");
            PureState acc = base;
            for (int i = 1; i < k; ++i) acc = tensor(acc, base);
            return acc;
        }
        return base;
    }

    bool at_boundary(std::size_t p) const { return p == s_.size() || s_[p] == '*' || s_[p] == '^'; }

    PureState atom() {
        // Fixed names first, longest match wins.
        const ZooEntry* best = nullptr;
        for (const auto& e : zoo_catalog()) {
            if (e.name.find('^') != std::string::npos) continue;
            if (s_.compare(pos_, e.name.size(), e.name) == 0 && at_boundary(pos_ + e.name.size())) {
                if (best == nullptr || e.name.size() > best->name.size()) best = &e;
            }
        }
        if (best != nullptr) {
            pos_ += best->name.size();
            return build_named(best->name);
        }
        if (s_[pos_] == '0' || s_[pos_] == '1') {
            const bool one = s_[pos_] == '1';
            ++pos_;
            return PureState::basis(1, one ? 1 : 0);
        }
        std::size_t end = pos_;
        while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
        const std::string name = s_.substr(pos_, end - pos_);
        if (name.empty() || end == s_.size() || s_[end] != '(') {
            throw contract_error("unknown state '" + s_.substr(pos_) + "'");
        }
        int depth = 0;
        std::size_t close = end;
        for (; close < s_.size(); ++close) {
            if (s_[close] == '(') ++depth;
            if (s_[close] == ')' && --depth == 0) break;
        }
        if (close == s_.size()) throw contract_error("unbalanced parentheses in '" + s_ + "'");
        const auto args = split_args(s_.substr(end + 1, close - end - 1));
        pos_ = close + 1;
        return build_family(name, args);
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::string join(const std::vector<double>& v) {
    std::ostringstream out;
    out.precision(6);
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ")";
    return out.str();
}

std::string join(const RVec& v, int from) {
    std::string out = "(";
    for (Eigen::Index i = from; i < v.size(); ++i) {
        out += (i > from ? ", " : "") + to_string(v[i]);
    }
    return out + ")";
}

std::string join_sectors(const SectorVector& s) {
    RVec r(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) r[i] = snap(s[i], 100000);
    return join(r, 1);
}

// Relations each family must satisfy; returns the largest residual.
double family_residual(const std::string& family, const std::vector<double>& p, const SectorVector& s) {
    if (family == "psi4") {
        const double s1 = std::pow(1 + std::cos(p[0]), 2) * std::pow(std::cos(p[1]), 2);
        const double s2 = 2 * (3 - (1 + std::sin(p[1])) * std::pow(std::sin(p[0]), 2));
        return std::max(std::abs(s[1] - s1), std::abs(s[2] - s2));
    }
    if (family == "boundary") {
        return std::abs(s[1]);
    }
    if (family == "psi_eta") {
        const double c = std::cos(2 * p[0]);
        return std::max(std::abs(s[1] - c * c), std::abs(s[2] - 2 * c * c));
    }
    if (family == "phi_eta") {
        const double e = p[0];
        const double den = std::pow(std::sin(e) + std::cos(e) + 3, 2);
        const double rhs =
            (28 * std::sin(e) - 6 * std::sin(2 * e) - 4 * std::cos(e) - std::cos(2 * e) + 37) / den;
        return std::max(std::abs(s[2] - rhs), std::abs(2 * s[1] - rhs));
    }
    throw contract_error("'" + family + "' is not a parametric family");
}

void check_domain(const std::string& family, const std::vector<double>& p) {
    const double pi = std::numbers::pi;
    if (family == "psi4") {
        require_range("theta", p[0], 0, pi / 2);
        require_range("phi", p[1], 0, 2 * pi);
    } else if (family == "psi_eta") {
        require_range("eta", p[0], 0, pi / 2);
    } else if (family == "phi_eta") {
        require_range("eta", p[0], 0, pi);
    }
}

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::published:
            return "published";
        case Provenance::computed:
            return "computed";
        case Provenance::none:
            break;
    }
    return "none";
}

const std::vector<ZooEntry>& zoo_catalog() {
    static const std::vector<ZooEntry> catalog = make_catalog();
    return catalog;
}

const ZooEntry* find_zoo_entry(const std::string& name) {
    for (const auto& e : zoo_catalog()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

const std::vector<FamilyInfo>& zoo_families() {
    static const std::vector<FamilyInfo> families = {
        {"GHZ", {"N", "phi"}, "cos(phi/2)|0..0> + sin(phi/2)|1..1>, phi defaults to pi/2"},
        {"Dicke", {"N", "a"}, "symmetric state with a excitations"},
        {"zero", {"N"}, "product state |0...0>"},
        {"haar", {"N", "seed"}, "Haar-random pure state"},
        {"psi4", {"theta", "phi"}, "cos(theta/2) GHZ(4,phi) + i sin(theta/2) Dicke(4,2)"},
        {"boundary", {"x", "y", "t"}, "real five-qubit family with S1 = 0"},
        {"psi_eta", {"eta"}, "five-qubit family with S2 = 2 S1 = 2 cos^2(2 eta)"},
        {"phi_eta", {"eta"}, "normalized cos(eta/2) psi5 + sin(eta/2)/sqrt(2) |00000>"},
    };
    return families;
}

PureState ghz(int n, double phi) {
    if (n < 1 || n > kMaxQubits) throw contract_error("GHZ qubit count out of range");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    v[0] = std::cos(phi / 2);
    v[v.size() - 1] += std::sin(phi / 2);
    return PureState(n, v);
}

PureState ghz(int n) { return ghz(n, std::numbers::pi / 2); }

PureState dicke(int n, int excitations) {
    if (n < 1 || n > kMaxQubits) throw contract_error("Dicke qubit count out of range");
    return PureState(n, dicke_vector(n, excitations));
}

PureState zero_state(int n) { return PureState::basis(n, 0); }

PureState psi4_family(double theta, double phi) {
    const Complex i(0.0, 1.0);
    return PureState(4, std::cos(theta / 2) * ghz(4, phi).amplitudes() +
                            i * std::sin(theta / 2) * dicke_vector(4, 2));
}

Eigen::VectorXcd boundary_family_vector(double x, double y, double t) {
    const double z = t * x - (t + 1) * y;
    const double tz = t * z;
    const std::vector<double> a = {0, -tz, 0, x,  y, 0, tz, 0, z, 0,  z, 0, 0,  y, 0, z,
                                   -z, 0, -y, 0, 0, z, 0, z, 0, tz, 0, y, -x, 0, tz, 0};
    Eigen::VectorXcd v(32);
    for (int k = 0; k < 32; ++k) v[k] = a[static_cast<std::size_t>(k)];
    return v;
}

double boundary_family_norm(double x, double y, double t) {
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    return 2 * (2 * t4 + 3 * t2 + 1) * x * x - 4 * t * (2 * t3 + 2 * t2 + 3 * t + 3) * x * y +
           2 * (2 * t4 + 4 * t3 + 5 * t2 + 6 * t + 5) * y * y;
}

PureState boundary_family(double x, double y, double t) {
    const double norm = boundary_family_norm(x, y, t);
    if (std::abs(norm - 1) > 1e-9) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "boundary(" << x << ", " << y << ", " << t << ") violates the norm constraint: " << norm;
        throw contract_error(msg.str());
    }
    return PureState(5, boundary_family_vector(x, y, t));
}

PureState psi_eta_family(double eta) {
    const double a = std::cos(eta) / 2;
    const double b = std::sin(eta) / 2;
    return PureState(5, kets(5,
                             {{a, "00011"},
                              {a, "00110"},
                              {-a, "10001"},
                              {a, "10100"},
                              {b, "01000"},
                              {-b, "01101"},
                              {b, "11010"},
                              {b, "11111"}},
                             1.0));
}

PureState phi_eta_family(double eta) {
    Eigen::VectorXcd v = std::cos(eta / 2) * psi5_vector();
    v[0] += std::sin(eta / 2) / std::sqrt(2.0);
    const double scale = 2 / std::sqrt(std::sin(eta) + std::cos(eta) + 3);
    return PureState(5, v * scale);
}

PureState build_named(const std::string& name) {
    const ZooEntry* e = find_zoo_entry(name);
    if (e == nullptr) throw contract_error("unknown zoo state '" + name + "'");
    return PureState(e->n_qubits, e->amplitudes());
}

PureState build(const std::string& expression) { return StateParser(expression).parse(); }

double eval_number(const std::string& text) { return NumberParser(text).parse(); }

FamilyPoint family_point(const std::string& family, const std::vector<double>& params, double tol) {
    const auto& fams = zoo_families();
    const auto it = std::find_if(fams.begin(), fams.end(), [&](const FamilyInfo& f) { return f.name == family; });
    if (it == fams.end() || family == "GHZ" || family == "Dicke" || family == "zero" || family == "haar") {
        throw contract_error("'" + family + "' is not a scannable family");
    }
    if (params.size() != it->params.size()) {
        throw contract_error(family + " takes " + std::to_string(it->params.size()) + " parameters");
    }
    check_domain(family, params);
    FamilyPoint pt;
    pt.params = params;
    PureState state = [&] {
        if (family == "psi4") return psi4_family(params[0], params[1]);
        if (family == "psi_eta") return psi_eta_family(params[0]);
        if (family == "phi_eta") return phi_eta_family(params[0]);
        const double norm = boundary_family_norm(params[0], params[1], params[2]);
        if (!(norm > 0)) throw contract_error("boundary family needs (x, y) != (0, 0)");
        const double raw = boundary_family_vector(params[0], params[1], params[2]).squaredNorm();
        if (std::abs(raw - norm) > 1e-9 * std::max(1.0, norm)) {
            throw computation_error("boundary family norm polynomial disagrees with the amplitudes");
        }
        const double r = 1 / std::sqrt(norm);
        pt.params = {params[0] * r, params[1] * r, params[2]};
        return boundary_family(pt.params[0], pt.params[1], pt.params[2]);
    }();
    pt.s = sector_lengths_walsh(state);
    pt.residual = family_residual(family, pt.params, pt.s);
    pt.ok = pt.residual <= tol;
    return pt;
}

std::vector<FamilyPoint> family_scan(const std::string& family, const std::vector<ParamRange>& grid, double tol) {
    std::vector<FamilyPoint> out;
    if (grid.empty()) throw contract_error("empty grid");
    std::size_t total = 1;
    for (const auto& r : grid) {
        if (r.steps < 1 || r.steps > 100000 || !(r.hi >= r.lo)) {
            throw contract_error("invalid grid range");
        }
        total *= static_cast<std::size_t>(r.steps);
    }
    if (total > 1000000) throw contract_error("grid has more than 10^6 points");
    std::vector<int> idx(grid.size(), 0);
    for (std::size_t count = 0; count < total; ++count) {
        std::vector<double> p(grid.size());
        for (std::size_t d = 0; d < grid.size(); ++d) {
            const auto& r = grid[d];
            p[d] = r.steps == 1 ? r.lo : r.lo + (r.hi - r.lo) * idx[d] / (r.steps - 1);
        }
        out.push_back(family_point(family, p, tol));
        for (std::size_t d = grid.size(); d-- > 0;) {
            if (++idx[d] < grid[d].steps) break;
            idx[d] = 0;
        }
    }
    return out;
}

std::vector<std::vector<double>> marginal_spectra(const PureState& state, int k) {
    std::vector<std::vector<double>> out;
    for (const auto& subset : subsets(state.n_qubits(), k)) {
        const ReducedState r = partial_trace(state, subset);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r.matrix, Eigen::EigenvaluesOnly);
        std::vector<double> ev;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            if (es.eigenvalues()[i] > 1e-9) ev.push_back(es.eigenvalues()[i]);
        }
        std::sort(ev.begin(), ev.end());
        out.push_back(std::move(ev));
    }
    return out;
}

int CatalogReport::unexpected_failures() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const CatalogCheck& c) { return !c.ok && !c.known_discrepancy; }));
}

CatalogReport verify_catalog() {
    CatalogReport report;
    constexpr double tol = 1e-9;
    for (const auto& e : zoo_catalog()) {
        const bool flagged = !e.discrepancy.empty();
        auto add = [&](std::string check, std::string expected, std::string computed, bool ok) {
            report.checks.push_back({e.name, std::move(check), std::move(expected), std::move(computed), ok,
                                     flagged && !ok});
        };
        const Eigen::VectorXcd raw = e.amplitudes();
        const double norm = raw.norm();
        add("norm", "1", std::to_string(norm), std::abs(norm - 1) <= 1e-12);
        const PureState state(e.n_qubits, raw);
        const int n = e.n_qubits;
        const SectorVector s = n <= kEnumerationCap ? sector_lengths(state) : sector_lengths_walsh(state);

        add("sum", std::to_string(1 << n), std::to_string(s.sum()), std::abs(s.sum() - std::ldexp(1.0, n)) <= tol);
        if (n % 2 == 1) {
            double alt = 0;
            for (int m = 0; m <= n; ++m) alt += (m % 2 ? -1 : 1) * s[m];
            add("alternating", "0", std::to_string(alt), std::abs(alt) <= tol);
        }
        if (e.expected) {
            double dev = 0;
            for (int m = 0; m <= n; ++m) dev = std::max(dev, std::abs(s[m] - to_double((*e.expected)[m])));
            add(e.provenance == Provenance::computed ? "sectors (computed reference)" : "sectors",
                join(*e.expected, 1), join_sectors(s), dev <= tol);
        }
        if (!e.printed.empty()) {
            add("sectors (as printed)", "(" + e.printed + ")", join_sectors(s), false);
        }
        if (e.claimed_uniformity > 0) {
            double worst = 0;
            for (int m = 1; m <= e.claimed_uniformity; ++m) worst = std::max(worst, std::abs(s[m]));
            add(std::to_string(e.claimed_uniformity) + "-uniform", "S_1..S_" + std::to_string(e.claimed_uniformity) + " = 0",
                "max |S_m| = " + std::to_string(worst), worst <= tol);
        }
        for (const auto& claim : e.spectra) {
            const auto spectra = marginal_spectra(state, claim.k);
            std::vector<bool> used(spectra.size(), false);
            bool ok = true;
            std::ostringstream expected, computed;
            for (const auto& [count, values] : claim.groups) {
                std::vector<double> want = values;
                std::sort(want.begin(), want.end());
                int matched = 0;
                for (std::size_t i = 0; i < spectra.size(); ++i) {
                    if (used[i] || spectra[i].size() != want.size()) continue;
                    bool same = true;
                    for (std::size_t j = 0; j < want.size(); ++j) same = same && std::abs(spectra[i][j] - want[j]) <= 1e-9;
                    if (same) {
                        used[i] = true;
                        ++matched;
                    }
                }
                const int target = count < 0 ? static_cast<int>(spectra.size()) : count;
                expected << (count < 0 ? std::string("all") : std::to_string(count)) << " x " << join(want) << " ";
                computed << matched << " x " << join(want) << " ";
                ok = ok && matched == target;
            }
            ok = ok && std::all_of(used.begin(), used.end(), [](bool b) { return b; });
            add(std::to_string(claim.k) + "-qubit marginal spectra", trim(expected.str()), trim(computed.str()), ok);
        }
        for (int k = 1; k < n; ++k) {
            std::vector<int> a(static_cast<std::size_t>(k));
            for (int q = 0; q < k; ++q) a[static_cast<std::size_t>(q)] = q + 1;
            const double v = purity_overlap_functional(state, a);
            const double bound = std::ldexp(1.0, -std::min(k, n - k));
            add("purity+overlap, A = first " + std::to_string(k), ">= " + std::to_string(bound), std::to_string(v),
                v >= bound - tol);
        }
    }
    return report;
}

}  // namespace sectorlens
