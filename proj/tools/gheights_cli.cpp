// Command-line surface: exact anticanonical heights of normal pairs, order and
// ideal discrepancy reports, bounded-height enumeration, invariant dimension
// counts, and exhaustive self-dual element search.
//
// Exit codes: 0 success, 2 schema violation, 3 mathematical precondition,
// 4 scale or refinement cap, 5 internal invariant violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "gheights/io.hpp"
#include "gheights/maximal_order.hpp"
#include "gheights/molien.hpp"

namespace gh = gheights;

namespace {

struct GlobalOptions {
    long precision_bits = gh::kDefaultPrecisionBits;
    int parallelism = 1;
    std::string cache_dir;
    std::string format = "json";

    gh::Rat target_radius() const {
        return gh::Rat(1, gh::pow_int(gh::Int(2), static_cast<unsigned long>(precision_bits)));
    }
};

int run_height(const std::string& pair_file, const GlobalOptions& opt) {
    gh::json doc = gh::parse_json_file(pair_file);
    gh::Pair pair = gh::pair_from_json(doc);

    if (!opt.cache_dir.empty() && !pair.algebra().is_split() && doc.contains("algebra") &&
        doc.at("algebra").contains("field")) {
        // Warm the maximal-order path through the cache; results are verified
        // on load so this cannot change the report.
        gh::FieldCache cache{opt.cache_dir};
        gh::FieldInput input = gh::field_from_json(doc.at("algebra").at("field"));
        cache.maximal_order_of(input);
    }

    gh::HeightReport report = gh::height(pair, opt.target_radius());
    int digits = static_cast<int>(opt.precision_bits * 30103 / 100000) + 2;
    if (opt.format == "csv") {
        std::cout << "height_mid,height_rad,finite_part,archimedean_mid,degree,group_order\n";
        std::cout << gh::decimal_string(report.height.midpoint(), digits) << ","
                  << gh::decimal_string(report.height.radius(), digits) << ","
                  << gh::format_rat(report.finite_part_invariant) << ","
                  << gh::decimal_string(report.archimedean_sum.midpoint(), digits) << ","
                  << report.invariants.field_degree << "," << report.invariants.group_order
                  << "\n";
    } else {
        std::cout << gh::height_report_to_json(report, digits).dump(2) << "\n";
    }
    return 0;
}

int run_discrepancy(const std::string& order_file, const std::string& ideal_file,
                    const GlobalOptions& opt) {
    gh::OrderInput in = gh::order_from_json(gh::parse_json_file(order_file));
    gh::KLattice ideal_lat =
        gh::ideal_lattice_from_json(gh::parse_json_file(ideal_file), in.field);
    gh::FractionalIdeal ideal(in.order, ideal_lat);

    gh::Order maximal = gh::maximal_order(in.field);
    gh::Rat dis = gh::discrepancy(in.order, ideal, maximal);
    gh::Rat index_t = gh::lattice_index(maximal.lattice(), in.order.lattice());
    gh::FractionalIdeal cond = gh::conductor(in.order, maximal);
    gh::Rat index_f = gh::lattice_index(maximal.lattice(), cond.lattice());
    gh::Rat upper = index_t * index_f;
    bool invertible = gh::is_invertible(in.order, ideal);
    bool gorenstein = gh::is_gorenstein(in.order, maximal);

    if (opt.format == "csv") {
        std::cout << "discrepancy,lower_bound,upper_bound,invertible,gorenstein\n";
        std::cout << gh::format_rat(dis) << ",1," << gh::format_rat(upper) << ","
                  << (invertible ? "true" : "false") << "," << (gorenstein ? "true" : "false")
                  << "\n";
    } else {
        gh::json j;
        j["discrepancy"] = gh::format_rat(dis);
        j["bounds"] = gh::json{{"lower", "1"}, {"upper", gh::format_rat(upper)}};
        j["invertible"] = invertible;
        j["order_is_gorenstein"] = gorenstein;
        j["ideal_norm"] = gh::format_rat(gh::ideal_norm(in.order, ideal));
        j["conductor"] = gh::lattice_to_json(cond.lattice().basis());
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int run_enumerate(const std::string& group_file, const std::string& bound_str,
                  const std::string& out_file, const GlobalOptions& opt) {
    auto group = gh::group_from_json(gh::parse_json_file(group_file));
    gh::Rat bound = gh::parse_rat(bound_str);
    gh::EnumerationResult result = gh::enumerate_split_points(group, bound, opt.parallelism);

    std::ofstream out(out_file);
    if (!out) throw gh::SchemaError("cannot open output file: " + out_file);
    out << "height,point\n";
    for (const auto& p : result.points) {
        std::string coords;
        for (std::size_t i = 0; i < p.pair.x().size(); ++i) {
            if (i) coords += ";";
            coords += gh::format_rat(p.pair.x()[i]);
        }
        out << gh::decimal_string(p.report.height.midpoint(), 12) << ","
            << gh::csv_escape(coords) << "\n";
    }
    std::cout << "bound,count\n";
    for (const auto& c : result.checkpoints)
        std::cout << gh::format_rat(c.bound) << "," << c.count << "\n";
    return 0;
}

int run_molien(const std::string& group_file, const GlobalOptions&) {
    auto group = gh::group_from_json(gh::parse_json_file(group_file));
    unsigned long brute = gh::invariant_dimension_bruteforce(*group);
    unsigned long formula = gh::invariant_dimension_formula(*group);
    unsigned long unnormalized = gh::invariant_dimension_formula_unnormalized(*group);
    std::cout << "group_order,dim_bruteforce,dim_formula,agree,formula_without_normalization\n";
    std::cout << group->order() << "," << brute << "," << formula << ","
              << (brute == formula ? "true" : "false") << "," << unnormalized << "\n";
    return 0;
}

int run_selfdual_search(const std::string& algebra_file, long coeff_bound, long denom_bound,
                        const GlobalOptions& opt) {
    gh::json doc = gh::parse_json_file(algebra_file);
    gh::GAlgebra alg = gh::algebra_from_json(doc);
    gh::SearchBox box;
    box.coefficient_bound = coeff_bound;
    box.denominator_bound = denom_bound;
    if (!alg.is_split() && doc.contains("restrict_to"))
        box.restrict_to =
            gh::KLattice(alg.coefficient_field(), gh::lattice_from_json(doc.at("restrict_to")));
    auto pairs = gh::selfdual_search(alg, box, opt.parallelism);
    gh::json out = gh::json::array();
    for (const auto& p : pairs) out.push_back(gh::pair_to_json(p));
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact anticanonical heights of Galois-algebra pairs"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--precision-bits", opt.precision_bits, "target enclosure radius 2^-bits")
        ->check(CLI::Range(long{4}, long{4096}));
    app.add_option("--parallelism", opt.parallelism, "worker threads for enumeration/search")
        ->check(CLI::Range(1, 256));
    app.add_option("--cache-dir", opt.cache_dir, "directory for the advisory field cache");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string pair_file, order_file, ideal_file, group_file, algebra_file;
    std::string bound = "10";
    std::string out_file = "points.csv";
    long coeff_bound = 2, denom_bound = 1;

    auto* cmd_height = app.add_subcommand("height", "height report for a pair file");
    cmd_height->add_option("pair", pair_file, "pair JSON file")->required();

    auto* cmd_dis = app.add_subcommand("discrepancy", "discrepancy report for an order and ideal");
    cmd_dis->add_option("order", order_file, "order JSON file")->required();
    cmd_dis->add_option("ideal", ideal_file, "ideal JSON file")->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "split pairs of bounded height");
    cmd_enum->add_option("group", group_file, "group JSON file")->required();
    cmd_enum->add_option("--bound", bound, "height bound (rational)");
    cmd_enum->add_option("--out", out_file, "output CSV path");

    auto* cmd_molien = app.add_subcommand("molien", "invariant dimension counts");
    cmd_molien->add_option("group", group_file, "group JSON file")->required();

    auto* cmd_sd = app.add_subcommand("selfdual-search", "exhaustive self-dual element search");
    cmd_sd->add_option("algebra", algebra_file, "algebra JSON file")->required();
    cmd_sd->add_option("--coeff-bound", coeff_bound, "coefficient bound");
    cmd_sd->add_option("--denominator-bound", denom_bound, "denominator bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_height->parsed()) return run_height(pair_file, opt);
        if (cmd_dis->parsed()) return run_discrepancy(order_file, ideal_file, opt);
        if (cmd_enum->parsed()) return run_enumerate(group_file, bound, out_file, opt);
        if (cmd_molien->parsed()) return run_molien(group_file, opt);
        if (cmd_sd->parsed()) return run_selfdual_search(algebra_file, coeff_bound, denom_bound, opt);
    } catch (const gh::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const gh::ScaleError& e) {
        std::cerr << "scale cap: " << e.what() << "\n";
        return 4;
    } catch (const gh::PrecisionError& e) {
        std::cerr << "refinement cap: " << e.what() << "\n";
        return 4;
    } catch (const gh::SearchCapError& e) {
        std::cerr << "search cap: " << e.what() << "\n";
        return 4;
    } catch (const gh::InternalInvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 5;
    } catch (const gh::PreconditionError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const gh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
