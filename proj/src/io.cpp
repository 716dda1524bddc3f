#include "qperm/io.hpp"

#include <cctype>
#include <fstream>

#include "qperm/errors.hpp"

namespace qperm {

namespace {

struct EntryParser {
    const std::string& s;
    std::size_t p = 0;

    explicit EntryParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }

    bool peek_digit() const {
        return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]));
    }

    mpz_class parse_unsigned_integer() {
        if (!peek_digit()) throw ParseError("expected digits", p);
        std::string digits;
        while (peek_digit()) digits += s[p++];
        return mpz_class(digits);
    }

    // [sign] digits [/ digits]
    Rat parse_rational(bool allow_sign) {
        skip_ws();
        int sign = 1;
        if (allow_sign && p < s.size() && (s[p] == '+' || s[p] == '-')) {
            if (s[p] == '-') sign = -1;
            ++p;
            skip_ws();
        }
        mpz_class num = parse_unsigned_integer();
        mpz_class den = 1;
        if (p < s.size() && s[p] == '/') {
            ++p;
            den = parse_unsigned_integer();
            if (den == 0) throw ParseError("zero denominator", p);
        }
        return Rat(sign < 0 ? mpz_class(-num) : num, den);
    }

    // q | q^k | q^(p/d)
    Rat parse_q_exponent() {
        ++p;  // past 'q'
        skip_ws();
        if (p >= s.size() || s[p] != '^') return Rat(1);
        ++p;
        skip_ws();
        if (p < s.size() && s[p] == '(') {
            ++p;
            Rat e = parse_rational(true);
            skip_ws();
            if (p >= s.size() || s[p] != ')') throw ParseError("expected ')'", p);
            ++p;
            return e;
        }
        int sign = 1;
        if (p < s.size() && s[p] == '-') {
            sign = -1;
            ++p;
        }
        mpz_class k = parse_unsigned_integer();
        return Rat(sign < 0 ? mpz_class(-k) : k, mpz_class(1));
    }

    // term := coeff [* qpart] | qpart
    Laurent parse_term(int sign) {
        skip_ws();
        Rat coeff(sign);
        bool have_coeff = false;
        if (peek_digit()) {
            coeff = Rat(sign) * parse_rational(false);
            have_coeff = true;
        }
        skip_ws();
        if (p < s.size() && s[p] == '*') {
            if (!have_coeff) throw ParseError("'*' without a coefficient", p);
            ++p;
            skip_ws();
            if (p >= s.size() || s[p] != 'q') throw ParseError("expected 'q' after '*'", p);
        }
        if (p < s.size() && s[p] == 'q') return Laurent::term(coeff, parse_q_exponent());
        if (!have_coeff) throw ParseError("expected a coefficient or 'q'", p);
        return Laurent(coeff);
    }

    Laurent parse() {
        skip_ws();
        if (p >= s.size()) throw ParseError("empty expression", 0);
        int sign = 1;
        if (s[p] == '+' || s[p] == '-') {
            if (s[p] == '-') sign = -1;
            ++p;
        }
        Laurent acc = parse_term(sign);
        for (;;) {
            skip_ws();
            if (p >= s.size()) break;
            if (s[p] != '+' && s[p] != '-')
                throw ParseError(std::string("unexpected character '") + s[p] + "'", p);
            sign = (s[p] == '-') ? -1 : 1;
            ++p;
            acc += parse_term(sign);
        }
        return acc;
    }
};

} // namespace

Laurent parse_entry(const std::string& text) { return EntryParser(text).parse(); }

std::string print_entry(const Laurent& v) { return v.str(); }

RingMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix file needs fields 'n' and 'entries'", 0);
    const std::size_t n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n)
        throw ParseError("'entries' must hold n rows", 0);
    RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("row " + std::to_string(i + 1) + " must hold n entries", 0);
        for (std::size_t k = 0; k < n; ++k) {
            const auto& cell = row[k];
            try {
                if (cell.is_number_integer())
                    m.at(i, k) = Laurent(Rat(static_cast<long>(cell.get<long long>())));
                else if (cell.is_string())
                    m.at(i, k) = parse_entry(cell.get<std::string>());
                else
                    throw ParseError("entry must be a string or an integer", 0);
            } catch (const ParseError& e) {
                throw ParseError("entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(k + 1) + "): " + e.what(),
                                 e.offset);
            }
        }
    }
    return m;
}

nlohmann::json matrix_to_json(const RingMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return {{"n", m.n()}, {"entries", std::move(rows)}};
}

nlohmann::json rat_to_json(const Rat& r) {
    if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
    return r.str();
}

Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rat::from_string(j.get<std::string>());
    throw ParseError("rational must be an integer or a 'p/q' string", 0);
}

ExponentMatrix exponent_matrix_from_json(const nlohmann::json& j) {
    const nlohmann::json* rows = &j;
    std::size_t n = 0;
    if (j.is_object()) {
        if (!j.contains("entries")) throw ParseError("expected 'entries'", 0);
        rows = &j.at("entries");
        n = j.value("n", rows->size());
    } else {
        n = j.size();
    }
    if (!rows->is_array() || rows->size() != n) throw ParseError("expected n rows", 0);
    ExponentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = (*rows)[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("row " + std::to_string(i + 1) + " must hold n entries", 0);
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = rat_from_json(row[k]);
    }
    return m;
}

nlohmann::json exponent_matrix_to_json(const ExponentMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(rat_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json perm_to_json(const Perm& p) {
    nlohmann::json a = nlohmann::json::array();
    for (int v : p.one_line()) a.push_back(v);
    return a;
}

Perm perm_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("permutation must be a one-line array", 0);
    std::vector<int> v;
    for (const auto& x : j) v.push_back(x.get<int>());
    return Perm(std::move(v));
}

Perm parse_perm_argument(const std::string& text, int n) {
    std::size_t p = 0;
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    if (p < text.size() && text[p] == '[') {
        const nlohmann::json j = nlohmann::json::parse(text);
        Perm out = perm_from_json(j);
        if (out.size() != n)
            throw UsageError("permutation has size " + std::to_string(out.size()) +
                             ", expected " + std::to_string(n));
        return out;
    }
    return Perm::from_cycles(text, n);
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace qperm
