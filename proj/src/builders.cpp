#include "hopflab/builders.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

using nlohmann::json;

namespace hopflab {

// ---------------------------------------------------------------------------
// GroupTable

GroupTable::GroupTable(std::string name, size_t n, std::vector<size_t> table,
                       std::vector<std::string> labels)
    : name_(std::move(name)),
      n_(n),
      table_(std::move(table)),
      labels_(std::move(labels)) {
    if (table_.size() != n_ * n_ || labels_.size() != n_)
        throw Error("GroupTable: table shape mismatch");
    // locate the identity
    bool found = false;
    for (size_t e = 0; e < n_ && !found; ++e) {
        bool ok = true;
        for (size_t a = 0; a < n_ && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            id_ = e;
            found = true;
        }
    }
    if (!found) throw Error("GroupTable: no identity element");
    // inverses
    inv_.assign(n_, n_);
    for (size_t a = 0; a < n_; ++a) {
        for (size_t b = 0; b < n_; ++b)
            if (mul(a, b) == id_ && mul(b, a) == id_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] == n_)
            throw Error("GroupTable: element " + std::to_string(a) +
                        " has no inverse");
    }
    // associativity over the full table
    for (size_t a = 0; a < n_; ++a)
        for (size_t b = 0; b < n_; ++b)
            for (size_t c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error("GroupTable: associativity fails at (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
    // conjugacy classes, ordered by smallest member
    std::vector<bool> seen(n_, false);
    for (size_t g = 0; g < n_; ++g) {
        if (seen[g]) continue;
        std::vector<size_t> cls;
        for (size_t x = 0; x < n_; ++x) {
            const size_t c = mul(mul(x, g), inv_[x]);
            if (!seen[c]) {
                seen[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
}

std::vector<size_t> GroupTable::centralizer(size_t g) const {
    std::vector<size_t> out;
    for (size_t x = 0; x < n_; ++x)
        if (mul(x, g) == mul(g, x)) out.push_back(x);
    return out;
}

std::optional<size_t> GroupTable::index_of(const std::string& label) const {
    for (size_t i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

GroupTable GroupTable::cyclic(size_t n) {
    if (n == 0) throw UnsupportedGroup("cyclic group needs n >= 1");
    std::vector<size_t> table(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "e"
                       : i == 1 ? "g"
                                : "g^" + std::to_string(i));
    return GroupTable("Z" + std::to_string(n), n, std::move(table),
                      std::move(labels));
}

GroupTable GroupTable::dihedral(size_t n) {
    if (n == 0) throw UnsupportedGroup("dihedral group needs n >= 1");
    const size_t N = 2 * n;
    // element (i, j) = r^i s^j at index i + n*j, with s r = r^-1 s
    auto idx = [n](size_t i, size_t j) { return i + n * j; };
    std::vector<size_t> table(N * N);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < 2; ++l) {
                    const size_t rot =
                        j == 0 ? (i + k) % n : (i + n - k % n) % n;
                    table[idx(i, j) * N + idx(k, l)] = idx(rot, (j + l) % 2);
                }
    std::vector<std::string> labels(N);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < 2; ++j) {
            std::string s;
            if (i == 1)
                s = "r";
            else if (i > 1)
                s = "r^" + std::to_string(i);
            if (j == 1) s += s.empty() ? "s" : "*s";
            if (s.empty()) s = "e";
            labels[idx(i, j)] = s;
        }
    return GroupTable("D" + std::to_string(n), N, std::move(table),
                      std::move(labels));
}

namespace {

std::string cycle_notation(const std::vector<size_t>& perm) {
    const size_t n = perm.size();
    std::vector<bool> seen(n, false);
    std::string out;
    for (size_t s = 0; s < n; ++s) {
        if (seen[s] || perm[s] == s) continue;
        std::string cyc = "(";
        size_t x = s;
        while (!seen[x]) {
            seen[x] = true;
            cyc += std::to_string(x + 1);
            x = perm[x];
        }
        out += cyc + ")";
    }
    return out.empty() ? "e" : out;
}

}  // namespace

GroupTable GroupTable::symmetric(size_t n) {
    if (n == 0 || n > 4)
        throw UnsupportedGroup("symmetric group supported for 1 <= n <= 4");
    std::vector<std::vector<size_t>> perms;
    std::vector<size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const size_t N = perms.size();
    auto find = [&](const std::vector<size_t>& q) {
        return static_cast<size_t>(
            std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<size_t> table(N * N);
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) {
            std::vector<size_t> q(n);
            for (size_t x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];
            table[a * N + b] = find(q);
        }
    std::vector<std::string> labels;
    for (const auto& perm : perms) labels.push_back(cycle_notation(perm));
    return GroupTable("S" + std::to_string(n), N, std::move(table),
                      std::move(labels));
}

GroupTable GroupTable::parse(const std::string& spec) {
    if (spec.size() < 2)
        throw UnsupportedGroup("unrecognized group spec: " + spec);
    const char kind = spec[0];
    const std::string num = spec.substr(1);
    if (num.find_first_not_of("0123456789") != std::string::npos)
        throw UnsupportedGroup("unrecognized group spec: " + spec);
    const size_t n = std::stoull(num);
    switch (kind) {
        case 'Z':
        case 'C':
            return cyclic(n);
        case 'D':
            return dihedral(n);
        case 'S':
            return symmetric(n);
        default:
            throw UnsupportedGroup("unrecognized group spec: " + spec);
    }
}

// ---------------------------------------------------------------------------
// generators

std::optional<size_t> HopfObject::basis_index(const std::string& label) const {
    for (size_t i = 0; i < basis_labels.size(); ++i)
        if (basis_labels[i] == label) return i;
    return std::nullopt;
}

HopfObject group_algebra(const GroupTable& g, const Field& f) {
    const size_t n = g.order();
    const Scalar one = Scalar::one(f);

    Mat mult(f, n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) mult.set(g.mul(i, j), i * n + j, one);
    Vec unit = Vec::basis(f, n, g.identity());

    Mat comult(f, n * n, n);
    Vec counit(f, n);
    for (size_t i = 0; i < n; ++i) {
        comult.set(i * n + i, i, one);
        counit.set(i, one);
    }
    Mat s(f, n, n);
    for (size_t i = 0; i < n; ++i) s.set(g.inv(i), i, one);

    HopfObject out;
    out.H = HopfAlgebraData(AlgebraData(f, n, std::move(mult), unit),
                            CoalgebraData(f, n, std::move(comult), counit),
                            std::move(s));
    out.R = RMatrix::unit_unit(out.H);
    for (size_t i = 0; i < n; ++i) out.basis_labels.push_back(g.label(i));
    out.name = "k" + g.name();
    out.provenance = "group_algebra " + g.name() + " over " + f.descriptor();
    if (f.is_fp() && n % f.modulus() == 0)
        out.warnings.push_back(
            "characteristic " + std::to_string(f.modulus()) +
            " divides |G| = " + std::to_string(n) +
            ": group algebra is not semisimple");

    const CheckReport hr = check_hopf(out.H);
    if (!hr.ok())
        throw ConstructionInvalid("group_algebra failed validation: " +
                                  hr.first_failure());
    const CheckReport qr = check_qt(out.H, *out.R);
    if (!qr.ok())
        throw ConstructionInvalid("group_algebra failed QT validation: " +
                                  qr.first_failure());
    return out;
}

HopfObject drinfeld_double(const GroupTable& g, const Field& f) {
    const size_t N = g.order();
    const size_t n = N * N;  // basis delta_a >< x at index a*N + x
    const Scalar one = Scalar::one(f);
    auto idx = [N](size_t a, size_t x) { return a * N + x; };

    Mat mult(f, n, n * n);
    for (size_t a = 0; a < N; ++a)
        for (size_t x = 0; x < N; ++x)
            for (size_t b = 0; b < N; ++b)
                for (size_t y = 0; y < N; ++y) {
                    if (a != g.mul(g.mul(x, b), g.inv(x))) continue;
                    mult.set(idx(a, g.mul(x, y)),
                             idx(a, x) * n + idx(b, y), one);
                }
    Vec unit(f, n);
    for (size_t a = 0; a < N; ++a) unit.set(idx(a, g.identity()), one);

    Mat comult(f, n * n, n);
    for (size_t a = 0; a < N; ++a)
        for (size_t x = 0; x < N; ++x)
            for (size_t b = 0; b < N; ++b) {
                // (delta_b >< x) (x) (delta_{b^-1 a} >< x)
                const size_t c = g.mul(g.inv(b), a);
                comult.set(idx(b, x) * n + idx(c, x), idx(a, x), one);
            }
    Vec counit(f, n);
    for (size_t x = 0; x < N; ++x) counit.set(idx(g.identity(), x), one);

    Mat s(f, n, n);
    for (size_t a = 0; a < N; ++a)
        for (size_t x = 0; x < N; ++x) {
            const size_t sa = g.mul(g.mul(g.inv(x), g.inv(a)), x);
            s.set(idx(sa, g.inv(x)), idx(a, x), one);
        }

    Mat rmat(f, n, n);
    for (size_t a = 0; a < N; ++a)
        for (size_t h = 0; h < N; ++h)
            rmat.set(idx(a, g.identity()), idx(h, a), one);

    HopfObject out;
    out.H = HopfAlgebraData(AlgebraData(f, n, std::move(mult), unit),
                            CoalgebraData(f, n, std::move(comult), counit),
                            std::move(s));
    out.R = RMatrix(std::move(rmat));
    for (size_t a = 0; a < N; ++a)
        for (size_t x = 0; x < N; ++x)
            out.basis_labels.push_back("d(" + g.label(a) + ")*" + g.label(x));
    out.name = "D(k" + g.name() + ")";
    out.provenance = "drinfeld_double " + g.name() + " over " + f.descriptor();
    if (f.is_fp() && N % f.modulus() == 0)
        out.warnings.push_back("characteristic divides |G|: double is outside "
                               "the semisimple range");

    const CheckReport hr = check_hopf(out.H);
    if (!hr.ok())
        throw ConstructionInvalid("drinfeld_double failed Hopf validation: " +
                                  hr.first_failure());
    const CheckReport qr = check_qt(out.H, *out.R);
    if (!qr.ok())
        throw ConstructionInvalid("drinfeld_double failed QT validation: " +
                                  qr.first_failure());
    if (!is_factorizable(out.H, *out.R))
        throw ConstructionInvalid(
            "drinfeld_double failed factorizability validation");
    return out;
}

// ---------------------------------------------------------------------------
// hopfspec JSON

namespace {

json sparse3(const Mat& m, size_t n, bool transpose_index) {
    // entries [i, j, k, coeff] of a structure tensor; for mult the matrix is
    // n x n^2 with column i*n+j, for comult n^2 x n with row j*n+k
    json arr = json::array();
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) {
            const Scalar v = m.at(r, c);
            if (v.is_zero()) continue;
            size_t i, j, k;
            if (transpose_index) {  // comult: row = (j,k), col = i
                i = c;
                j = r / n;
                k = r % n;
            } else {  // mult: row = k, col = (i,j)
                i = c / n;
                j = c % n;
                k = r;
            }
            arr.push_back(json::array(
                {i, j, k, v.str()}));
        }
    std::sort(arr.begin(), arr.end());
    return arr;
}

json dense_vec(const Vec& v) {
    json arr = json::array();
    for (size_t i = 0; i < v.size(); ++i) arr.push_back(v.at(i).str());
    return arr;
}

json sparse_mat(const Mat& m) {
    json arr = json::array();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const Scalar v = m.at(i, j);
            if (!v.is_zero()) arr.push_back(json::array({i, j, v.str()}));
        }
    std::sort(arr.begin(), arr.end());
    return arr;
}

size_t get_index(const json& j, size_t dim, const std::string& where) {
    if (!j.is_number_unsigned())
        throw ParseError(where + ": index is not a nonnegative integer");
    const size_t v = j.get<size_t>();
    if (v >= dim)
        throw ParseError(where + ": index " + std::to_string(v) +
                         " out of range (dim " + std::to_string(dim) + ")");
    return v;
}

Scalar get_scalar(const json& j, const Field& f, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where + ": coefficient must be a string");
    try {
        return Scalar::parse(f, j.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace

std::string hopfspec_to_string(const HopfObject& h) {
    const size_t n = h.H.dim();
    json j;
    j["field"] = h.H.field().descriptor();
    j["dim"] = n;
    j["basis"] = h.basis_labels.empty()
                     ? [&] {
                           json arr = json::array();
                           for (size_t i = 0; i < n; ++i)
                               arr.push_back("e" + std::to_string(i));
                           return arr;
                       }()
                     : json(h.basis_labels);
    j["mult"] = sparse3(h.H.alg.mult(), n, false);
    j["unit"] = dense_vec(h.H.alg.unit());
    j["comult"] = sparse3(h.H.coa.comult(), n, true);
    j["counit"] = dense_vec(h.H.coa.counit());
    j["antipode"] = sparse_mat(h.H.antipode);
    if (h.R) j["r"] = sparse_mat(h.R->coeff);
    j["metadata"] = {{"name", h.name}, {"provenance", h.provenance}};
    return j.dump(2) + "\n";
}

void write_hopfspec(const HopfObject& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    out << hopfspec_to_string(h);
}

HopfObject hopfspec_from_string(const std::string& text, bool validate) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    auto require = [&](const char* key) -> const json& {
        if (!j.contains(key))
            throw ParseError(std::string("missing key \"") + key + "\"");
        return j.at(key);
    };

    const Field f = [&] {
        try {
            return Field::parse(require("field").get<std::string>());
        } catch (const Error& e) {
            throw ParseError(std::string("field: ") + e.what());
        }
    }();
    const json& jd = require("dim");
    if (!jd.is_number_unsigned() || jd.get<size_t>() == 0)
        throw ParseError("dim must be a positive integer");
    const size_t n = jd.get<size_t>();

    Mat mult(f, n, n * n);
    {
        const json& arr = require("mult");
        for (size_t t = 0; t < arr.size(); ++t) {
            const std::string where = "mult[" + std::to_string(t) + "]";
            const json& e = arr[t];
            if (!e.is_array() || e.size() != 4)
                throw ParseError(where + ": expected [i, j, k, coeff]");
            const size_t i = get_index(e[0], n, where);
            const size_t jx = get_index(e[1], n, where);
            const size_t k = get_index(e[2], n, where);
            if (!mult.at(k, i * n + jx).is_zero())
                throw ParseError(where + ": duplicate entry");
            mult.set(k, i * n + jx, get_scalar(e[3], f, where));
        }
    }
    Mat comult(f, n * n, n);
    {
        const json& arr = require("comult");
        for (size_t t = 0; t < arr.size(); ++t) {
            const std::string where = "comult[" + std::to_string(t) + "]";
            const json& e = arr[t];
            if (!e.is_array() || e.size() != 4)
                throw ParseError(where + ": expected [i, j, k, coeff]");
            const size_t i = get_index(e[0], n, where);
            const size_t jx = get_index(e[1], n, where);
            const size_t k = get_index(e[2], n, where);
            if (!comult.at(jx * n + k, i).is_zero())
                throw ParseError(where + ": duplicate entry");
            comult.set(jx * n + k, i, get_scalar(e[3], f, where));
        }
    }
    auto read_vec = [&](const char* key) {
        const json& arr = require(key);
        if (!arr.is_array() || arr.size() != n)
            throw ParseError(std::string(key) + ": expected " +
                             std::to_string(n) + " entries");
        Vec v(f, n);
        for (size_t i = 0; i < n; ++i)
            v.set(i, get_scalar(arr[i], f,
                                std::string(key) + "[" + std::to_string(i) + "]"));
        return v;
    };
    const Vec unit = read_vec("unit");
    const Vec counit = read_vec("counit");

    Mat s(f, n, n);
    {
        const json& arr = require("antipode");
        for (size_t t = 0; t < arr.size(); ++t) {
            const std::string where = "antipode[" + std::to_string(t) + "]";
            const json& e = arr[t];
            if (!e.is_array() || e.size() != 3)
                throw ParseError(where + ": expected [i, j, coeff]");
            const size_t i = get_index(e[0], n, where);
            const size_t jx = get_index(e[1], n, where);
            if (!s.at(i, jx).is_zero())
                throw ParseError(where + ": duplicate entry");
            s.set(i, jx, get_scalar(e[2], f, where));
        }
    }

    HopfObject out;
    out.H = HopfAlgebraData(AlgebraData(f, n, std::move(mult), unit),
                            CoalgebraData(f, n, std::move(comult), counit),
                            std::move(s));
    if (j.contains("r")) {
        Mat rmat(f, n, n);
        const json& arr = j.at("r");
        for (size_t t = 0; t < arr.size(); ++t) {
            const std::string where = "r[" + std::to_string(t) + "]";
            const json& e = arr[t];
            if (!e.is_array() || e.size() != 3)
                throw ParseError(where + ": expected [i, j, coeff]");
            const size_t i = get_index(e[0], n, where);
            const size_t jx = get_index(e[1], n, where);
            if (!rmat.at(i, jx).is_zero())
                throw ParseError(where + ": duplicate entry");
            rmat.set(i, jx, get_scalar(e[2], f, where));
        }
        out.R = RMatrix(std::move(rmat));
    }
    if (j.contains("basis")) {
        const json& arr = j.at("basis");
        if (!arr.is_array() || arr.size() != n)
            throw ParseError("basis: expected " + std::to_string(n) +
                             " labels");
        for (const auto& l : arr) out.basis_labels.push_back(l.get<std::string>());
    } else {
        for (size_t i = 0; i < n; ++i)
            out.basis_labels.push_back("e" + std::to_string(i));
    }
    if (j.contains("metadata")) {
        const json& m = j.at("metadata");
        if (m.contains("name")) out.name = m.at("name").get<std::string>();
        if (m.contains("provenance"))
            out.provenance = m.at("provenance").get<std::string>();
    }

    if (validate) {
        const CheckReport hr = check_hopf(out.H);
        if (!hr.ok())
            throw ValidationError("hopf axiom failed: " + hr.first_failure());
        if (out.R) {
            const CheckReport qr = check_qt(out.H, *out.R);
            if (!qr.ok())
                throw ValidationError("quasi-triangularity failed: " +
                                      qr.first_failure());
        }
    }
    return out;
}

HopfObject read_hopfspec(const std::string& path, bool validate) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return hopfspec_from_string(buf.str(), validate);
}

}  // namespace hopflab
