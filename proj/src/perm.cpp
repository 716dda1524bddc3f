#include "qperm/perm.hpp"

#include <algorithm>
#include <numeric>

namespace qperm {

int inversion_count(const std::vector<int>& values) {
    int inv = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] > values[j]) ++inv;
    return inv;
}

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    const int n = static_cast<int>(img_.size());
    if (n == 0) throw Error("Perm: empty one-line notation");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw Error("Perm: not a bijection of {1.." + std::to_string(n) + "}");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    ell_ = inversion_count(img_);
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::shift(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = i % n + 1;
    return Perm(std::move(v));
}

Perm Perm::reversal(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - i;
    return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& rhs) const {
    if (size() != rhs.size()) throw DimensionMismatch("Perm: size mismatch in composition");
    std::vector<int> v(img_.size());
    for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>(i - 1)] = (*this)(rhs(i));
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Perm(std::move(v));
}

std::string Perm::cycles() const {
    if (size() > 9) throw Error("Perm: cycle notation supported only for n <= 9");
    std::string out;
    std::vector<char> done(img_.size(), 0);
    for (int s = 1; s <= size(); ++s) {
        if (done[static_cast<std::size_t>(s - 1)] || (*this)(s) == s) continue;
        out += "(";
        int i = s;
        do {
            done[static_cast<std::size_t>(i - 1)] = 1;
            out += static_cast<char>('0' + i);
            i = (*this)(i);
        } while (i != s);
        out += ")";
    }
    return out.empty() ? "id" : out;
}

Perm Perm::from_cycles(const std::string& text, int n) {
    if (n < 1 || n > 9) throw Error("Perm: cycle notation supported only for 1 <= n <= 9");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::size_t p = 0;
    auto skip_ws = [&] { while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p; };
    skip_ws();
    if (text.compare(p, 2, "id") == 0) {
        p += 2;
        skip_ws();
        if (p != text.size()) throw ParseError("trailing characters after 'id'", p);
        return Perm(std::move(img));
    }
    bool any = false;
    while (p < text.size()) {
        skip_ws();
        if (p >= text.size()) break;
        if (text[p] != '(') throw ParseError("expected '('", p);
        ++p;
        std::vector<int> cyc;
        while (p < text.size() && text[p] != ')') {
            if (std::isspace(static_cast<unsigned char>(text[p])) || text[p] == ',') {
                ++p;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[p])))
                throw ParseError("expected digit in cycle", p);
            const int v = text[p] - '0';
            if (v < 1 || v > n) throw ParseError("cycle entry out of range", p);
            cyc.push_back(v);
            ++p;
        }
        if (p >= text.size()) throw ParseError("unterminated cycle", p);
        ++p;  // ')'
        if (cyc.size() < 2) throw ParseError("cycle must have at least two entries", p);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int from = cyc[i];
            const int to = cyc[(i + 1) % cyc.size()];
            if (img[static_cast<std::size_t>(from - 1)] != from)
                throw ParseError("repeated entry across cycles", p);
            img[static_cast<std::size_t>(from - 1)] = to;
        }
        any = true;
        skip_ws();
    }
    if (!any) throw ParseError("empty cycle expression", 0);
    return Perm(std::move(img));
}

std::vector<Perm> symmetric_group(int n) {
    if (n < 1) throw Error("symmetric_group: n must be positive");
    if (n > 10) throw SizeTooLarge("symmetric_group: n = " + std::to_string(n) + " > 10");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

namespace {

void hessenberg_rec(int n, int row, std::vector<int>& partial, std::vector<char>& used,
                    std::vector<Perm>& out) {
    if (row > n) {
        out.emplace_back(partial);
        return;
    }
    const int hi = std::min(n, row + 1);
    for (int v = 1; v <= hi; ++v) {
        if (used[static_cast<std::size_t>(v - 1)]) continue;
        used[static_cast<std::size_t>(v - 1)] = 1;
        partial.push_back(v);
        hessenberg_rec(n, row + 1, partial, used, out);
        partial.pop_back();
        used[static_cast<std::size_t>(v - 1)] = 0;
    }
}

} // namespace

std::vector<Perm> hessenberg_compatible(int n) {
    if (n < 1) throw Error("hessenberg_compatible: n must be positive");
    if (n > 20) throw SizeTooLarge("hessenberg_compatible: n = " + std::to_string(n) + " > 20");
    std::vector<Perm> out;
    out.reserve(1u << (n - 1));
    std::vector<int> partial;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    hessenberg_rec(n, 1, partial, used, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> DihedralGroup::all() const {
    std::vector<Perm> out = rotations;
    out.insert(out.end(), reflections.begin(), reflections.end());
    return out;
}

DihedralGroup dihedral_group(int n) {
    if (n < 3) throw Error("dihedral_group: requires n >= 3");
    DihedralGroup g;
    const Perm c = Perm::shift(n);
    const Perm s0 = Perm::reversal(n);
    Perm ck = Perm::identity(n);
    for (int k = 0; k < n; ++k) {
        g.rotations.push_back(ck);
        g.reflections.push_back(ck * s0);
        ck = c * ck;
    }
    return g;
}

bool in_dihedral(const Perm& t) {
    const int n = t.size();
    if (n < 3) return true;
    const DihedralGroup g = dihedral_group(n);
    for (const Perm& p : g.rotations)
        if (p == t) return true;
    for (const Perm& p : g.reflections)
        if (p == t) return true;
    return false;
}

Perm pattern_of(const std::vector<int>& values) {
    const std::size_t k = values.size();
    std::vector<int> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        int rank = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (values[j] < values[i]) ++rank;
            if (i != j && values[j] == values[i])
                throw Error("pattern_of: values must be distinct");
        }
        out[i] = rank;
    }
    return Perm(std::move(out));
}

Perm standardize(const Perm& t, const std::array<int, 4>& idx) {
    for (int k = 0; k < 4; ++k) {
        if (idx[static_cast<std::size_t>(k)] < 1 || idx[static_cast<std::size_t>(k)] > t.size())
            throw BadIndexSet("standardize: index out of range");
        if (k > 0 && idx[static_cast<std::size_t>(k)] <= idx[static_cast<std::size_t>(k - 1)])
            throw BadIndexSet("standardize: indices must be strictly increasing");
    }
    std::vector<int> vals(4);
    for (int k = 0; k < 4; ++k) vals[static_cast<std::size_t>(k)] = t(idx[static_cast<std::size_t>(k)]);
    return pattern_of(vals);
}

bool is_balanced(const std::array<Perm, 4>& quad) {
    const int n = quad[0].size();
    for (const Perm& p : quad)
        if (p.size() != n) throw DimensionMismatch("is_balanced: size mismatch");
    for (int i = 1; i <= n; ++i) {
        const int a = quad[0](i), d = quad[3](i);
        const int b = quad[1](i), c = quad[2](i);
        const bool same = (std::min(a, d) == std::min(b, c)) && (std::max(a, d) == std::max(b, c));
        if (!same) return false;
    }
    return true;
}

Perm embed_pattern(const Perm& rho, const std::array<int, 4>& pos, int n) {
    if (rho.size() != 4) throw DimensionMismatch("embed_pattern: pattern must be in S_4");
    for (int k = 0; k < 4; ++k) {
        if (pos[static_cast<std::size_t>(k)] < 1 || pos[static_cast<std::size_t>(k)] > n)
            throw BadIndexSet("embed_pattern: position out of range");
        if (k > 0 && pos[static_cast<std::size_t>(k)] <= pos[static_cast<std::size_t>(k - 1)])
            throw BadIndexSet("embed_pattern: positions must be strictly increasing");
    }
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (int a = 1; a <= 4; ++a)
        img[static_cast<std::size_t>(pos[static_cast<std::size_t>(a - 1)] - 1)] =
            pos[static_cast<std::size_t>(rho(a) - 1)];
    return Perm(std::move(img));
}

} // namespace qperm
