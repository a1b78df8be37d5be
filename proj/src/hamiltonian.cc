// Copyright 2026 The trotterobs Authors
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

#include "trotterobs/hamiltonian.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <numeric>
#include <sstream>

#include "trotterobs/errors.h"
#include "trotterobs/random.h"

namespace trotterobs {

const char *parse_error_kind_name(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::missing_header:
            return "missing_header";
        case ParseErrorKind::bad_header:
            return "bad_header";
        case ParseErrorKind::bad_pauli_character:
            return "bad_pauli_character";
        case ParseErrorKind::wrong_word_length:
            return "wrong_word_length";
        case ParseErrorKind::non_hermitian_coefficient:
            return "non_hermitian_coefficient";
        case ParseErrorKind::bad_coefficient:
            return "bad_coefficient";
        case ParseErrorKind::empty_summand:
            return "empty_summand";
        case ParseErrorKind::term_outside_summand:
            return "term_outside_summand";
        case ParseErrorKind::unknown_directive:
            return "unknown_directive";
        case ParseErrorKind::malformed_line:
            return "malformed_line";
        case ParseErrorKind::no_summands:
            return "no_summands";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string &detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + parse_error_kind_name(kind) + ": " + detail),
      kind_(kind),
      line_(line) {
}

EvolutionOrder identity_order(std::size_t length) {
    EvolutionOrder order(length);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

bool is_permutation(const EvolutionOrder &order, std::size_t length) {
    if (order.size() != length) {
        return false;
    }
    std::vector<bool> seen(length, false);
    for (auto j : order) {
        if (j >= length || seen[j]) {
            return false;
        }
        seen[j] = true;
    }
    return true;
}

std::string format_order(const EvolutionOrder &order) {
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k) {
            out += '-';
        }
        out += std::to_string(order[k] + 1);
    }
    return out;
}

EvolutionOrder parse_order(std::string_view text) {
    EvolutionOrder order;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('-', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto token = text.substr(pos, end - pos);
        std::size_t value = 0;
        auto res = std::from_chars(token.data(), token.data() + token.size(), value);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size() || value == 0) {
            throw std::invalid_argument("bad evolution order '" + std::string(text) + "'");
        }
        order.push_back(value - 1);
        pos = end + 1;
    }
    if (!is_permutation(order, order.size())) {
        throw std::invalid_argument("evolution order '" + std::string(text) + "' is not a permutation");
    }
    return order;
}

HamiltonianModel::HamiltonianModel(unsigned n, std::vector<PauliSum> summands, std::vector<std::string> labels)
    : n_(n), summands_(std::move(summands)), labels_(std::move(labels)) {
    for (std::size_t j = 0; j < summands_.size(); ++j) {
        auto &s = summands_[j];
        if (s.num_qubits() != n_) {
            if (s.empty()) {
                s = PauliSum(n_);
            } else {
                throw DimensionError("summand " + std::to_string(j + 1) + " acts on " +
                                     std::to_string(s.num_qubits()) + " qubits, model has " + std::to_string(n_));
            }
        }
        if (!s.is_hermitian()) {
            throw DomainError("summand " + std::to_string(j + 1) + " is not Hermitian");
        }
    }
    if (labels_.empty()) {
        for (std::size_t j = 0; j < summands_.size(); ++j) {
            labels_.push_back("H" + std::to_string(j + 1));
        }
    } else if (labels_.size() != summands_.size()) {
        throw std::invalid_argument("label count does not match summand count");
    }
    order_ = identity_order(summands_.size());
}

HamiltonianModel HamiltonianModel::with_order(EvolutionOrder order) const {
    if (!is_permutation(order, summands_.size())) {
        throw std::invalid_argument("evolution order is not a permutation of the summands");
    }
    HamiltonianModel out = *this;
    out.order_ = std::move(order);
    return out;
}

PauliSum HamiltonianModel::total() const {
    PauliSum out(n_);
    for (const auto &s : summands_) {
        out += s;
    }
    return out;
}

DenseOperator HamiltonianModel::dense() const {
    return total().to_dense();
}

double HamiltonianModel::max_summand_norm() const {
    double out = 0;
    for (const auto &s : summands_) {
        out = std::max(out, spectral_norm(s.to_dense()));
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto b = s.find_first_not_of(" \t", pos);
        if (b == std::string_view::npos) {
            break;
        }
        auto e = s.find_first_of(" \t", b);
        if (e == std::string_view::npos) {
            e = s.size();
        }
        out.push_back(s.substr(b, e - b));
        pos = e;
    }
    return out;
}

double parse_coefficient(std::string_view token, std::size_t line) {
    if (!token.empty() && (token.back() == 'i' || token.back() == 'j' || token.front() == '(')) {
        throw ParseError(ParseErrorKind::non_hermitian_coefficient, line,
                         "coefficient '" + std::string(token) + "' is not real");
    }
    double value = 0;
    const char *begin = token.data();
    if (!token.empty() && token.front() == '+') {
        ++begin;
    }
    auto res = std::from_chars(begin, token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ParseError(ParseErrorKind::bad_coefficient, line, "cannot parse coefficient '" + std::string(token) + "'");
    }
    return value;
}

PauliString parse_word(std::string_view word, unsigned n, std::size_t line) {
    for (char c : word) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError(ParseErrorKind::bad_pauli_character, line,
                             std::string("character '") + c + "' in word '" + std::string(word) + "'");
        }
    }
    if (word.size() != n) {
        throw ParseError(ParseErrorKind::wrong_word_length, line,
                         "word '" + std::string(word) + "' has length " + std::to_string(word.size()) + ", expected " +
                             std::to_string(n));
    }
    return PauliString::from_word(word);
}

}  // namespace

HamiltonianModel parse_hamiltonian(std::string_view text) {
    std::optional<unsigned> n;
    std::vector<PauliSum> summands;
    std::vector<std::string> labels;
    std::size_t open_summand_line = 0;
    std::size_t open_summand_terms = 0;

    auto close_summand = [&]() {
        if (open_summand_line != 0 && open_summand_terms == 0) {
            throw ParseError(ParseErrorKind::empty_summand, open_summand_line,
                             "summand '" + labels.back() + "' has no terms");
        }
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto tokens = split_ws(line);
        const auto directive = tokens[0];
        if (!n && directive == "n" && summands.empty()) {
            unsigned value = 0;
            bool ok = tokens.size() == 2;
            if (ok) {
                auto res = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), value);
                ok = res.ec == std::errc() && res.ptr == tokens[1].data() + tokens[1].size();
            }
            if (!ok || value == 0 || value > kMaxQubits) {
                throw ParseError(ParseErrorKind::bad_header, line_no, "bad qubit count in '" + std::string(line) + "'");
            }
            n = value;
            continue;
        }
        if (directive == "summand") {
            close_summand();
            auto label = trim(line.substr(std::string_view("summand").size()));
            summands.emplace_back(n.value_or(0));
            labels.emplace_back(label.empty() ? "H" + std::to_string(summands.size()) : std::string(label));
            open_summand_line = line_no;
            open_summand_terms = 0;
        } else if (directive == "term") {
            if (summands.empty()) {
                throw ParseError(ParseErrorKind::term_outside_summand, line_no, "term before any summand");
            }
            if (tokens.size() != 3) {
                throw ParseError(ParseErrorKind::malformed_line, line_no,
                                 "expected 'term <coefficient> <pauli word>'");
            }
            double c = parse_coefficient(tokens[1], line_no);
            if (!n) {
                // no header: the first word fixes n
                const auto width = tokens[2].size();
                parse_word(tokens[2], static_cast<unsigned>(std::min<std::size_t>(width, kMaxQubits)), line_no);
                if (width > kMaxQubits) {
                    throw ParseError(ParseErrorKind::wrong_word_length, line_no, "word longer than 64 qubits");
                }
                n = static_cast<unsigned>(width);
                summands.back() = PauliSum(*n);
            }
            auto p = parse_word(tokens[2], *n, line_no);
            summands.back().add_term(p, c);
            ++open_summand_terms;
        } else if (directive == "n") {
            throw ParseError(ParseErrorKind::bad_header, line_no,
                             n ? "duplicate header" : "header must precede the first summand");
        } else if (!n && summands.empty()) {
            throw ParseError(ParseErrorKind::missing_header, line_no, "expected 'n <qubits>' or 'summand' first");
        } else {
            throw ParseError(ParseErrorKind::unknown_directive, line_no,
                             "unknown directive '" + std::string(directive) + "'");
        }
    }
    if (!n) {
        throw ParseError(ParseErrorKind::missing_header, line_no, "document has no 'n' header");
    }
    close_summand();
    if (summands.empty()) {
        throw ParseError(ParseErrorKind::no_summands, line_no, "document declares no summands");
    }
    return HamiltonianModel(*n, std::move(summands), std::move(labels));
}

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

HamiltonianModel load_hamiltonian(const std::string &path) {
    return parse_hamiltonian(read_file(path));
}

PauliSum parse_observable(std::string_view text) {
    auto model = parse_hamiltonian(text);
    if (model.num_summands() != 1) {
        throw ParseError(ParseErrorKind::malformed_line, 1, "observable files must contain exactly one summand");
    }
    return model.summand(0);
}

PauliSum load_observable(const std::string &path) {
    return parse_observable(read_file(path));
}

std::string format_shortest(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string serialize_hamiltonian(const HamiltonianModel &model) {
    std::string out = "n " + std::to_string(model.num_qubits()) + "\n";
    for (std::size_t j = 0; j < model.num_summands(); ++j) {
        out += "summand " + model.labels()[j] + "\n";
        for (const auto &[p, c] : model.summand(j).terms()) {
            out += "term " + format_shortest(c.real()) + " " + p.word() + "\n";
        }
    }
    return out;
}

HamiltonianModel build_hydrogen_sto3g() {
    // Coefficients and words as published; qubit 0 is the rightmost letter.
    static const std::pair<double, const char *> kTerms[] = {
        {-0.81262, "IIII"}, {0.17120, "IIIZ"},  {0.17120, "IIZI"},  {-0.22279, "IZII"}, {-0.22279, "ZIII"},
        {0.16862, "IIZZ"},  {0.12054, "IZIZ"},  {0.16587, "ZIIZ"},  {0.16587, "IZZI"},  {0.12054, "ZIZI"},
        {0.17435, "ZZII"},  {-0.04532, "YYXX"}, {0.04532, "XYYX"},  {0.04532, "YXXY"},  {-0.04532, "XXYY"},
    };
    std::vector<PauliSum> summands;
    std::vector<std::string> labels;
    for (const auto &[c, word] : kTerms) {
        summands.emplace_back(PauliString::from_word(word), c);
        labels.emplace_back(word);
    }
    return HamiltonianModel(4, std::move(summands), std::move(labels));
}

std::vector<double> heisenberg_fields(unsigned n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> h(n);
    for (auto &v : h) {
        v = 2.0 * uniform_open01(rng) - 1.0;
    }
    return h;
}

HamiltonianModel build_heisenberg_xyz(unsigned n, std::uint64_t seed, Boundary boundary) {
    if (n < 2) {
        throw std::invalid_argument("build_heisenberg_xyz: need at least 2 qubits");
    }
    std::vector<std::pair<unsigned, unsigned>> bonds;
    for (unsigned j = 0; j + 1 < n; ++j) {
        bonds.emplace_back(j, j + 1);
    }
    if (boundary == Boundary::periodic && n > 2) {
        bonds.emplace_back(n - 1, 0);
    }
    std::vector<PauliSum> summands;
    for (char axis : {'X', 'Y', 'Z'}) {
        PauliSum part(n);
        for (auto [a, b] : bonds) {
            auto pa = PauliString::single(n, a, axis);
            auto pb = PauliString::single(n, b, axis);
            part.add_term(pauli_mul(pa, pb).string, 1.0);
        }
        summands.push_back(std::move(part));
    }
    const auto fields = heisenberg_fields(n, seed);
    for (unsigned j = 0; j < n; ++j) {
        summands[2].add_term(PauliString::single(n, j, 'Z'), fields[j]);
    }
    return HamiltonianModel(n, std::move(summands), {"XX", "YY", "ZZ+hZ"});
}

HamiltonianModel build_transverse_ising(unsigned n, const std::vector<IsingCoupling> &couplings,
                                        const std::vector<double> &fields) {
    if (n == 0) {
        throw std::invalid_argument("build_transverse_ising: need at least 1 qubit");
    }
    if (fields.size() > n) {
        throw DimensionError("build_transverse_ising: more fields than qubits");
    }
    PauliSum zz(n), x(n);
    for (const auto &c : couplings) {
        if (c.i >= n || c.j >= n || c.i == c.j) {
            throw DimensionError("build_transverse_ising: bad coupling indices (" + std::to_string(c.i) + ", " +
                                 std::to_string(c.j) + ")");
        }
        auto p = pauli_mul(PauliString::single(n, c.i, 'Z'), PauliString::single(n, c.j, 'Z')).string;
        zz.add_term(p, c.strength);
    }
    for (unsigned j = 0; j < fields.size(); ++j) {
        x.add_term(PauliString::single(n, j, 'X'), fields[j]);
    }
    return HamiltonianModel(n, {std::move(zz), std::move(x)}, {"ZZ", "X"});
}

PauliSum build_observable_z_uniform(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("build_observable_z_uniform: need at least 1 qubit");
    }
    // 1 + 0.1 sum_j z_j peaks at 1 + 0.1 n on |0...0>.
    const double c = 1.0 + 0.1 * n;
    PauliSum o(PauliString::identity(n), 1.0 / c);
    for (unsigned j = 0; j < n; ++j) {
        o.add_term(PauliString::single(n, j, 'Z'), 0.1 / c);
    }
    return o;
}

}  // namespace trotterobs
