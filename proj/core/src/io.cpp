#include "gheights/io.hpp"

#include <fstream>

#include "gheights/maximal_order.hpp"

namespace gheights {

namespace {

Rat rat_from_json(const json& v) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rat(v.get<std::string>());
    throw SchemaError("expected an integer or a 'p/q' string");
}

std::vector<Rat> rat_vector_from_json(const json& v) {
    if (!v.is_array()) throw SchemaError("expected an array of rationals");
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(rat_from_json(e));
    return out;
}

Int int_from_json(const json& v) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        Rat r = parse_rat(v.get<std::string>());
        if (r.get_den() != 1) throw SchemaError("expected an integer");
        return r.get_num();
    }
    throw SchemaError("expected an integer");
}

}  // namespace

std::shared_ptr<const FiniteGroup> group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("table"))
        throw SchemaError("group: need {order, table}");
    std::size_t n = j.at("order").get<std::size_t>();
    const auto& t = j.at("table");
    if (!t.is_array() || t.size() != n) throw SchemaError("group: table must have 'order' rows");
    std::vector<std::vector<std::size_t>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = t.at(i);
        if (!row.is_array() || row.size() != n)
            throw SchemaError("group: table rows must have 'order' entries");
        for (const auto& v : row) table[i].push_back(v.get<std::size_t>());
    }
    std::vector<std::string> names;
    if (j.contains("names"))
        for (const auto& v : j.at("names")) names.push_back(v.get<std::string>());
    try {
        return std::make_shared<const FiniteGroup>(std::move(table), std::move(names));
    } catch (const GroupError& e) {
        throw SchemaError(std::string("group: ") + e.what());
    }
}

json group_to_json(const FiniteGroup& group) {
    json j;
    j["order"] = group.order();
    json rows = json::array();
    for (const auto& row : group.table()) rows.push_back(row);
    j["table"] = std::move(rows);
    return j;
}

HNFBasis lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("denominator") || !j.contains("basis"))
        throw SchemaError("lattice: need {denominator, basis}");
    Int den = int_from_json(j.at("denominator"));
    if (den <= 0) throw SchemaError("lattice: denominator must be positive");
    const auto& rows = j.at("basis");
    if (!rows.is_array() || rows.empty()) throw SchemaError("lattice: empty basis");
    std::size_t n = rows.size();
    QMat m(n, rows.at(0).size());
    for (std::size_t i = 0; i < n; ++i) {
        auto r = rat_vector_from_json(rows.at(i));
        if (r.size() != m.cols()) throw SchemaError("lattice: ragged basis");
        m.set_row(i, r);
    }
    HNFBasis h = hnf_rational(m * Rat(Int(1), den));
    return h;
}

json lattice_to_json(const HNFBasis& basis) {
    json j;
    j["denominator"] = basis.denominator.get_str();
    json rows = json::array();
    for (std::size_t i = 0; i < basis.basis.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < basis.basis.cols(); ++k)
            row.push_back(basis.basis.at(i, k).get_str());
        rows.push_back(std::move(row));
    }
    j["basis"] = std::move(rows);
    return j;
}

FieldInput field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("min_poly"))
        throw SchemaError("field: need at least {min_poly}");
    ZPoly f;
    for (const auto& v : j.at("min_poly")) f.push_back(int_from_json(v));
    FieldPtr field;
    try {
        field = NumberField::create(std::move(f));
    } catch (const Error& e) {
        throw SchemaError(std::string("field: ") + e.what());
    }
    if (!j.contains("group")) throw SchemaError("field: need {group}");
    auto group = group_from_json(j.at("group"));
    if (!j.contains("galois") || !j.at("galois").contains("generator_images"))
        throw SchemaError("field: need {galois: {generator_images}}");
    std::map<std::size_t, FieldElement> gens;
    for (const auto& [key, val] : j.at("galois").at("generator_images").items()) {
        std::size_t g = std::stoul(key);
        auto coords = rat_vector_from_json(val);
        if (coords.size() != static_cast<std::size_t>(field->degree()))
            throw SchemaError("field: generator image has wrong length");
        gens.emplace(g, FieldElement(field, coords));
    }
    GaloisAction action = [&] {
        try {
            return GaloisAction::from_generators(group, field, gens);
        } catch (const GroupError& e) {
            throw SchemaError(std::string("field: ") + e.what());
        }
    }();
    std::optional<HNFBasis> hint;
    if (j.contains("maximal_order_hint")) {
        const auto& h = j.at("maximal_order_hint");
        if (h.is_array()) {
            // Bare basis matrix: rows of rationals.
            QMat m(h.size(), field->degree());
            for (std::size_t i = 0; i < h.size(); ++i) {
                auto row = rat_vector_from_json(h.at(i));
                if (row.size() != m.cols())
                    throw SchemaError("field: ragged maximal_order_hint");
                m.set_row(i, row);
            }
            hint = hnf_rational(m);
        } else {
            hint = lattice_from_json(h);
        }
    }
    return FieldInput{std::move(field), std::move(action), std::move(hint)};
}

GAlgebra algebra_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("algebra: expected an object");
    if (j.contains("split")) return GAlgebra::split(group_from_json(j.at("split")));
    if (j.contains("field")) {
        FieldInput in = field_from_json(j.at("field"));
        try {
            return GAlgebra::galois_field(in.field, in.action);
        } catch (const PreconditionError& e) {
            throw SchemaError(std::string("algebra: ") + e.what());
        }
    }
    throw SchemaError("algebra: need {split} or {field}");
}

Pair pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("algebra") || !j.contains("x"))
        throw SchemaError("pair: need {algebra, x}");
    GAlgebra alg = algebra_from_json(j.at("algebra"));
    auto x = rat_vector_from_json(j.at("x"));
    return Pair(std::move(alg), std::move(x));
}

json pair_to_json(const Pair& pair) {
    json j;
    if (pair.algebra().is_split()) {
        j["algebra"] = json{{"split", group_to_json(pair.algebra().group())}};
    } else {
        json field;
        json mp = json::array();
        for (const auto& c : pair.algebra().coefficient_field()->min_poly())
            mp.push_back(c.get_str());
        field["min_poly"] = std::move(mp);
        field["group"] = group_to_json(pair.algebra().group());
        json images;
        for (std::size_t g = 0; g < pair.algebra().group().order(); ++g) {
            json coords = json::array();
            for (const auto& c : pair.algebra().action().image(g).coords())
                coords.push_back(format_rat(c));
            images[std::to_string(g)] = std::move(coords);
        }
        field["galois"] = json{{"generator_images", std::move(images)}};
        j["algebra"] = json{{"field", std::move(field)}};
    }
    json x = json::array();
    for (const auto& c : pair.x()) x.push_back(format_rat(c));
    j["x"] = std::move(x);
    return j;
}

namespace {
// Radius rendered outward: never printed smaller than it is.
std::string decimal_string_ceil(const Rat& q, int digits) {
    Int scale = pow_int(Int(10), static_cast<unsigned long>(digits));
    Int t;
    mpz_cdiv_q(t.get_mpz_t(), Int(q.get_num() * scale).get_mpz_t(), q.get_den().get_mpz_t());
    Rat up(t, scale);
    up.canonicalize();
    return decimal_string(up, digits);
}
}  // namespace

json interval_to_json(const RealInterval& iv, int digits) {
    json j;
    j["mid"] = decimal_string(iv.midpoint(), digits);
    j["rad"] = decimal_string_ceil(iv.radius(), digits);
    j["exact"] = iv.is_point();
    if (iv.is_point()) j["value"] = format_rat(iv.lo());
    return j;
}

json height_report_to_json(const HeightReport& report, int digits) {
    json j;
    j["archimedean_sum"] = interval_to_json(report.archimedean_sum, digits);
    j["finite_part_invariant"] = format_rat(report.finite_part_invariant);
    j["finite_part_direct"] = format_rat(report.finite_part_direct);
    j["finite_parts_agree"] = report.finite_part_invariant == report.finite_part_direct;
    j["exponent_archimedean"] = format_rat(report.exponent_archimedean);
    j["exponent_finite"] = format_rat(report.exponent_finite);
    j["height"] = interval_to_json(report.height, digits);
    json inv;
    inv["degree"] = report.invariants.field_degree;
    inv["group_order"] = report.invariants.group_order;
    inv["disc_multiplier_ring"] = format_rat(report.invariants.disc_multiplier);
    inv["disc_conjugate_lattice"] = format_rat(report.invariants.disc_lambda);
    inv["discrepancy"] = format_rat(report.invariants.dis);
    Rat n_extended = Rat(1) / report.finite_part_direct;
    inv["ideal_norm_extended_lattice"] = format_rat(n_extended);
    inv["ideal_norm_conjugate_lattice"] = format_rat(n_extended / report.invariants.dis);
    inv["conjugate_lattice"] = lattice_to_json(report.invariants.lambda.basis());
    inv["multiplier_ring"] = lattice_to_json(report.invariants.multiplier.lattice().basis());
    inv["maximal_order"] = lattice_to_json(report.invariants.maximal.lattice().basis());
    j["invariants"] = std::move(inv);
    return j;
}

json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

FieldCache::FieldCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string FieldCache::fingerprint(const FieldInput& input) {
    // FNV-1a over a canonical rendering of the minimal polynomial and images.
    std::string repr;
    for (const auto& c : input.field->min_poly()) repr += c.get_str() + "|";
    repr += "/";
    for (std::size_t g = 0; g < input.action.group().order(); ++g) {
        for (const auto& c : input.action.image(g).coords()) repr += format_rat(c) + ",";
        repr += ";";
    }
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char ch : repr) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

Order FieldCache::maximal_order_of(const FieldInput& input) {
    std::filesystem::path file = dir_ / (fingerprint(input) + ".json");
    if (std::filesystem::exists(file)) {
        try {
            json rec = parse_json_file(file);
            HNFBasis basis = lattice_from_json(rec.at("maximal_order"));
            // The cached basis is advisory: push it through the full hint
            // verification before trusting it.
            return maximal_order(input.field, basis.rational_basis());
        } catch (const Error&) {
            // Stale or corrupt record: fall through and recompute.
        }
    }
    Order o = input.maximal_order_hint
                  ? maximal_order(input.field, input.maximal_order_hint->rational_basis())
                  : maximal_order(input.field);
    json rec;
    rec["fingerprint"] = fingerprint(input);
    json mp = json::array();
    for (const auto& c : input.field->min_poly()) mp.push_back(c.get_str());
    rec["min_poly"] = std::move(mp);
    rec["maximal_order"] = lattice_to_json(o.lattice().basis());
    rec["disc"] = format_rat(o.discriminant());
    std::ofstream out(file);
    out << rec.dump(2) << "\n";
    return o;
}

OrderInput order_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("denominator") ||
        !j.contains("basis"))
        throw SchemaError("order: need {field: {min_poly}, denominator, basis}");
    ZPoly f;
    for (const auto& v : j.at("field").at("min_poly")) f.push_back(int_from_json(v));
    FieldPtr field;
    try {
        field = NumberField::create(std::move(f));
    } catch (const Error& e) {
        throw SchemaError(std::string("order: ") + e.what());
    }
    HNFBasis basis = lattice_from_json(j);
    return OrderInput{field, Order(KLattice(field, basis))};
}

KLattice ideal_lattice_from_json(const json& j, const FieldPtr& field) {
    return KLattice(field, lattice_from_json(j));
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace gheights
