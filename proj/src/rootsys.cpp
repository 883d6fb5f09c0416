#include "qsym/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "qsym/errors.hpp"
#include "qsym/linalg.hpp"

namespace qsym {

namespace {

bool valid_type(char s, int n) {
    switch (s) {
        case 'A': return n >= 1;
        case 'B': return n >= 2;
        case 'C': return n >= 2;
        case 'D': return n >= 3;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

// Gram matrix (alpha_i, alpha_j) of one simple component, Bourbaki numbering,
// long roots of squared length 2.
std::vector<std::vector<Rational>> simple_form(char s, int n) {
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
    auto edge = [&](int i, int j, const Rational& v) { b[i][j] = b[j][i] = v; };
    const Rational half(1, 2);
    switch (s) {
        case 'A':
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
            break;
        case 'B':
            for (int i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 2 : 1;
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
            break;
        case 'C':
            for (int i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 1 : 2;
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -half);
            edge(n - 2, n - 1, -1);
            break;
        case 'D':
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
            edge(n - 3, n - 1, -1);
            break;
        case 'E':
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            edge(0, 2, -1);
            edge(1, 3, -1);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, -1);
            break;
        case 'F':
            b[0][0] = b[1][1] = 2;
            b[2][2] = b[3][3] = 1;
            edge(0, 1, -1);
            edge(1, 2, -1);
            edge(2, 3, -half);
            break;
        case 'G':
            b[0][0] = Rational(2, 3);
            b[1][1] = 2;
            edge(0, 1, -1);
            break;
    }
    return b;
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

SimpleType parse_type(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '_') s += c;
    std::string l = lower(s);
    auto num = [&](size_t from) -> int {
        if (from >= l.size()) throw InvalidType("missing rank in '" + raw + "'");
        for (size_t k = from; k < l.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(l[k]))) throw InvalidType("bad type '" + raw + "'");
        return std::stoi(l.substr(from));
    };
    SimpleType t;
    if (l.rfind("sl", 0) == 0) {
        t = {'A', num(2) - 1};
    } else if (l.rfind("so", 0) == 0) {
        int n = num(2);
        t = n % 2 ? SimpleType{'B', (n - 1) / 2} : SimpleType{'D', n / 2};
    } else if (l.rfind("sp", 0) == 0) {
        int n = num(2);
        if (n % 2) throw InvalidType("sp(n) needs even n: '" + raw + "'");
        t = {'C', n / 2};
    } else if (!l.empty()) {
        t = {static_cast<char>(std::toupper(static_cast<unsigned char>(l[0]))), num(1)};
    } else {
        throw InvalidType("empty type");
    }
    if (!valid_type(t.series, t.rank)) throw InvalidType("unsupported type '" + raw + "'");
    return t;
}

SimpleType canonical_type(const SimpleType& t) {
    if (t.series == 'B' && t.rank == 2) return {'C', 2};
    if (t.series == 'D' && t.rank == 3) return {'A', 3};
    return t;
}

WeightVec WeightVec::from_ints(const IntVec& v) {
    WeightVec w;
    for (int x : v) w.coords.emplace_back(x);
    return w;
}

WeightVec WeightVec::parse(const std::string& s) {
    WeightVec w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) throw ParseError("empty weight coordinate in '" + s + "'");
        w.coords.push_back(Rational::parse(t));
    }
    if (w.coords.empty()) throw ParseError("empty weight '" + s + "'");
    return w;
}

bool WeightVec::is_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r.is_integer(); });
}

IntVec WeightVec::to_ints() const {
    IntVec v;
    for (const auto& r : coords) v.push_back(static_cast<int>(r.to_int()));
    return v;
}

std::string WeightVec::str() const {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) out += (i ? "," : "") + coords[i].str();
    return out;
}

RootSystem::RootSystem(std::vector<SimpleType> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw InvalidType("empty root system");
    for (const auto& c : comps_) {
        if (!valid_type(c.series, c.rank)) throw InvalidType("unsupported type " + c.str());
        offsets_.push_back(rank_);
        for (int i = 0; i < c.rank; ++i) comp_of_.push_back(static_cast<int>(offsets_.size()) - 1);
        rank_ += c.rank;
    }
    bform_.assign(rank_, std::vector<Rational>(rank_));
    for (size_t c = 0; c < comps_.size(); ++c) {
        auto b = simple_form(comps_[c].series, comps_[c].rank);
        int o = offsets_[c];
        for (int i = 0; i < comps_[c].rank; ++i)
            for (int j = 0; j < comps_[c].rank; ++j) bform_[o + i][o + j] = b[i][j];
    }
    cartan_.assign(rank_, IntVec(rank_, 0));
    std::vector<std::vector<Rational>> a(rank_, std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            Rational v = Rational(2) * bform_[i][j] / bform_[j][j];
            cartan_[i][j] = static_cast<int>(v.to_int());
            a[i][j] = v;
        }
    // Inverse Cartan matrix by Gauss-Jordan on [A | I].
    std::vector<std::vector<Rational>> aug(rank_, std::vector<Rational>(2 * rank_));
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) aug[i][j] = a[i][j];
        aug[i][rank_ + i] = 1;
    }
    auto e = rref(aug, 2 * rank_);
    cartan_inv_.assign(rank_, std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) cartan_inv_[i][j] = e.rows[i][rank_ + j];

    // Positive roots: closure of the simple roots under simple reflections.
    std::set<IntVec> seen;
    std::deque<IntVec> queue;
    for (int i = 0; i < rank_; ++i) {
        IntVec r(rank_, 0);
        r[i] = 1;
        seen.insert(r);
        queue.push_back(r);
    }
    while (!queue.empty()) {
        IntVec b = queue.front();
        queue.pop_front();
        IntVec f = root_to_fund(b);
        for (int i = 0; i < rank_; ++i) {
            if (f[i] == 0) continue;
            IntVec s = b;
            s[i] -= f[i];
            if (std::any_of(s.begin(), s.end(), [](int x) { return x < 0; })) continue;
            if (seen.insert(s).second) queue.push_back(s);
        }
    }
    pos_.assign(seen.begin(), seen.end());
    std::stable_sort(pos_.begin(), pos_.end(), [](const IntVec& x, const IntVec& y) {
        int hx = 0, hy = 0;
        for (int v : x) hx += v;
        for (int v : y) hy += v;
        if (hx != hy) return hx < hy;
        return x > y;  // within a height, earlier nodes first
    });
    for (size_t k = 0; k < pos_.size(); ++k) index_[pos_[k]] = static_cast<int>(k);
}

RootSystem build_root_system(const std::vector<SimpleType>& spec) { return RootSystem(spec); }

int RootSystem::root_index(const IntVec& root_coords) const {
    auto it = index_.find(root_coords);
    return it == index_.end() ? -1 : it->second;
}

IntVec RootSystem::highest_root(int component) const {
    IntVec best;
    int hb = -1;
    for (const auto& r : pos_) {
        bool inside = true;
        int h = 0;
        for (int i = 0; i < rank_; ++i) {
            if (r[i] != 0 && comp_of_[i] != component) inside = false;
            h += r[i];
        }
        if (inside && h > hb) {
            hb = h;
            best = r;
        }
    }
    return best;
}

IntVec RootSystem::root_to_fund(const IntVec& c) const {
    IntVec l(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) l[j] += c[i] * cartan_[i][j];
    }
    return l;
}

std::vector<Rational> RootSystem::fund_to_root(const std::vector<Rational>& l) const {
    std::vector<Rational> c(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (l[i].is_zero()) continue;
        for (int j = 0; j < rank_; ++j) c[j] += l[i] * cartan_inv_[i][j];
    }
    return c;
}

std::vector<Rational> RootSystem::fund_to_root(const IntVec& l) const {
    std::vector<Rational> r;
    for (int x : l) r.emplace_back(x);
    return fund_to_root(r);
}

Rational RootSystem::form(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    // (lambda, mu) = sum_i lambda_i (omega_i, mu) and (omega_i, alpha_j) = delta_ij (alpha_j,alpha_j)/2
    std::vector<Rational> cb = fund_to_root(b);
    Rational acc;
    for (int i = 0; i < rank_; ++i) {
        if (a[i].is_zero()) continue;
        acc += a[i] * cb[i] * bform_[i][i] / Rational(2);
    }
    return acc;
}

Rational RootSystem::form(const IntVec& a, const IntVec& b) const {
    std::vector<Rational> ra, rb;
    for (int x : a) ra.emplace_back(x);
    for (int x : b) rb.emplace_back(x);
    return form(ra, rb);
}

Rational RootSystem::form_roots(const IntVec& a, const IntVec& b) const {
    Rational acc;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (b[j] != 0) acc += Rational(a[i] * b[j]) * bform_[i][j];
    }
    return acc;
}

std::vector<Rational> RootSystem::coroot_coeffs(const IntVec& c) const {
    Rational len = form_roots(c, c);
    std::vector<Rational> out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = Rational(c[i]) * bform_[i][i] / len;
    return out;
}

bool RootSystem::is_root_coords(const IntVec& c) const {
    if (root_index(c) >= 0) return true;
    IntVec n = c;
    for (auto& x : n) x = -x;
    return root_index(n) >= 0;
}

bool RootSystem::is_root(const WeightVec& v) const {
    if (static_cast<int>(v.size()) != rank_) return false;
    std::vector<Rational> c = fund_to_root(v.coords);
    IntVec ic;
    for (const auto& x : c) {
        if (!x.is_integer()) return false;
        ic.push_back(static_cast<int>(x.to_int()));
    }
    return is_root_coords(ic);
}

std::vector<int> RootSystem::cominuscule_nodes() const {
    if (!is_simple()) throw NotSimple("cominuscule nodes need a simple root system, got " + type_string());
    IntVec h = highest_root(0);
    std::vector<int> out;
    for (int i = 0; i < rank_; ++i)
        if (h[i] == 1) out.push_back(i);
    return out;
}

bool RootSystem::is_dominant(const IntVec& f) const {
    return std::all_of(f.begin(), f.end(), [](int x) { return x >= 0; });
}

IntVec RootSystem::reflect(const IntVec& f, int i) const {
    IntVec out = f;
    int k = f[i];
    if (k == 0) return out;
    for (int j = 0; j < rank_; ++j) out[j] -= k * cartan_[i][j];
    return out;
}

IntVec RootSystem::dominant_conjugate(IntVec f) const {
    for (;;) {
        int i = 0;
        while (i < rank_ && f[i] >= 0) ++i;
        if (i == rank_) return f;
        f = reflect(f, i);
    }
}

std::string RootSystem::type_string() const {
    std::string out;
    for (size_t c = 0; c < comps_.size(); ++c) out += (c ? "x" : "") + comps_[c].str();
    return out;
}

}  // namespace qsym
