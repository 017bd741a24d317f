// Command-line front end: construct, verify, search, table, cosets.
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include <qlrc/serialize.hpp>

using namespace qlrc;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream os(out_path);
        if (!os) throw spec_invalid_error("cannot open output path " + out_path);
        os << text << '\n';
    }
}

struct ConstructArgs {
    std::string family;
    int64_t q = 0;
    int s = 0;
    int64_t lambda = 1;
    int64_t u = 0, v = 0;
    std::vector<int64_t> axes;
};

FamilyInstance run_construct(const ConstructArgs& a) {
    bool cartesian = a.family.rfind("cart", 0) == 0;
    std::string base_name = cartesian ? a.family.substr(4) : a.family;
    FamilySpec spec;
    spec.family = family_from_string(base_name);
    spec.q = a.q;
    spec.s = a.s;
    spec.lambda = a.lambda;
    if (a.u > 0 && a.v > 0) throw spec_invalid_error("give either --u or --v, not both");
    spec.uv = a.u > 0 ? a.u : a.v;
    if (spec.uv <= 0) throw spec_invalid_error("one of --u or --v is required");
    if (cartesian && a.axes.empty()) throw spec_invalid_error("--axes is required for Cartesian families");
    if (!cartesian && !a.axes.empty()) throw spec_invalid_error("--axes only applies to Cartesian families");

    FamilyInstance inst = build_family_instance(spec);
    if (cartesian) inst = cartesian_extend(inst, a.axes);
    return inst;
}

std::string render_instance(const FamilyInstance& inst, const std::string& format) {
    if (format == "json") return to_json(inst).dump(2);
    if (format == "csv")
        return csv_header() + "\n" +
               to_csv(inst.record, inst.spec.s, inst.spec.lambda, inst.spec.uv, inst.classical_defect);
    if (format == "matrix") return inst.outer.generator.export_text();
    throw spec_invalid_error("unknown emit format '" + format + "'");
}

// Re-check a construct artifact from its serialized form: duality, locality,
// distances and both bound defects are recomputed from the stored matrices.
void run_verify(const ordered_json& j) {
    std::string family = j.at("record").at("family").get<std::string>();
    bool cartesian = family.rfind("cart", 0) == 0;
    int64_t q = j.at("q").get<int64_t>();
    int s = j.at("s").get<int>();
    DualityMode mode = j.at("mode").get<std::string>() == "hermitian" ? DualityMode::hermitian
                                                                      : DualityMode::euclidean;
    int e = 0;
    int64_t p = detail::prime_of(q, &e);
    auto tower = build_tower(p, e, s, mode);

    LinearCode inner(GFMatrix::import_text(tower, j.at("inner_code").at("generator").get<std::string>()));
    LinearCode outer(GFMatrix::import_text(tower, j.at("outer_code").at("generator").get<std::string>()));

    auto check = [](bool cond, const std::string& what) {
        if (!cond) throw verification_mismatch_error(what);
    };

    check(dual(inner, mode) == outer, "outer code is not the dual of the inner code");
    check(is_dual_containing(outer, mode), "outer code lost dual containment");

    const auto& cls = j.at("classical");
    check(outer.dim() == cls.at("k").get<int64_t>(), "stored classical dimension is wrong");
    check(outer.n == cls.at("n").get<int64_t>(), "stored classical length is wrong");
    bool exact = j.at("exact").get<bool>();
    int64_t d = min_distance(outer);
    check(exact ? d == cls.at("d").get<int64_t>() : d >= cls.at("d").get<int64_t>(),
          "stored classical distance is wrong");

    const auto& loc = j.at("locality");
    int64_t r = loc.at("r").get<int64_t>(), delta = loc.at("delta").get<int64_t>();
    auto sets = loc.at("sets").get<std::vector<std::vector<int>>>();
    std::vector<std::vector<int>> blocks = sets;
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    auto cert = certify_locality(outer, r, delta, blocks);
    check(classical_singleton_defect(outer.n, outer.dim(), d, r, delta) ==
              cls.at("defect").get<int64_t>(),
          "stored classical defect is wrong");

    const auto& rec = j.at("record");
    cert.classical_defect = cls.at("defect").get<int64_t>();
    check(quantum_locality_criterion(inner, mode, cert), "quantum locality criterion failed");
    int64_t qk = 2 * (int64_t)outer.dim() - outer.n;
    check(qk == rec.at("k").get<int64_t>(), "stored quantum dimension is wrong");
    check(quantum_singleton_defect(outer.n, qk, rec.at("d").get<int64_t>(), r, delta) ==
              rec.at("quantum_defect").get<int64_t>(),
          "stored quantum defect is wrong");
    check(purity_check(inner, mode) == rec.at("pure").get<bool>(), "stored purity flag is wrong");
    (void)cartesian;
}

std::vector<FamilyInstance> run_search(const std::vector<int64_t>& qs, int64_t max_length,
                                       bool optimal_only, int jobs) {
    auto rows = table_one(qs, max_length, true);
    std::vector<TableRow> feasible;
    for (auto& row : rows)
        if (row.verified) feasible.push_back(row);
    std::sort(feasible.begin(), feasible.end(), [](const TableRow& a, const TableRow& b) {
        return std::tie(a.family, a.q, a.lambda, a.uv, a.axis_sizes) <
               std::tie(b.family, b.q, b.lambda, b.uv, b.axis_sizes);
    });

    std::vector<FamilyInstance> out(feasible.size());
    std::vector<char> keep(feasible.size(), 0);
    std::mutex mu;
    size_t next = 0;
    auto worker = [&]() {
        while (true) {
            size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= feasible.size()) return;
                i = next++;
            }
            const TableRow& row = feasible[i];
            bool cartesian = row.family.rfind("cart", 0) == 0;
            FamilySpec spec{family_from_string(cartesian ? row.family.substr(4) : row.family),
                            row.q, row.s, row.lambda, row.uv, {}};
            FamilyInstance inst = build_family_instance(spec);
            if (cartesian) inst = cartesian_extend(inst, row.axis_sizes);
            if (!optimal_only || inst.record.optimal) {
                out[i] = std::move(inst);
                keep[i] = 1;
            }
        }
    };
    if (jobs < 1) jobs = 1;
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::vector<FamilyInstance> kept;
    for (size_t i = 0; i < out.size(); ++i)
        if (keep[i]) kept.push_back(std::move(out[i]));
    return kept;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(r,delta) locally recoverable classical and stabilizer codes"};
    app.require_subcommand(1);

    ConstructArgs cargs;
    std::string format = "json", out_path;
    std::vector<int64_t> q_list;
    int64_t max_length = 64;
    bool optimal_only = false;
    int jobs = 1;
    std::string verify_path;
    int64_t cosets_N = 0, cosets_z = 0;

    auto* construct = app.add_subcommand("construct", "build one family instance");
    construct->add_option("--family", cargs.family, "A, B, C, C2, cartA, cartB or cartC")->required();
    construct->add_option("--q", cargs.q)->required();
    construct->add_option("--s", cargs.s)->required();
    construct->add_option("--lambda", cargs.lambda);
    construct->add_option("--u", cargs.u);
    construct->add_option("--v", cargs.v);
    construct->add_option("--axes", cargs.axes)->delimiter(',');
    construct->add_option("--emit", format, "json, csv or matrix");
    construct->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "re-check a construct artifact");
    verify->add_option("path", verify_path)->required();

    auto* search = app.add_subcommand("search", "sweep the family windows");
    search->add_option("--q", q_list)->delimiter(',');
    search->add_option("--max-length", max_length);
    search->add_flag("--optimal-only", optimal_only);
    search->add_option("--jobs", jobs);
    search->add_option("--emit", format, "json or csv");
    search->add_option("--out", out_path);

    auto* table = app.add_subcommand("table", "emit the parameter table");
    table->add_option("--q", q_list)->delimiter(',');
    table->add_option("--max-length", max_length);
    table->add_option("--emit", format, "json or csv");
    table->add_option("--out", out_path);

    auto* cosets = app.add_subcommand("cosets", "cyclotomic cosets modulo N");
    cosets->add_option("--N", cosets_N)->required();
    cosets->add_option("--z", cosets_z)->required();
    cosets->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) return app.exit(ex);
        std::cerr << ordered_json{{"error", "parse"}, {"message", ex.what()}}.dump() << '\n';
        return 2;
    }

    try {
        if (*construct) {
            emit(render_instance(run_construct(cargs), format), out_path);
        } else if (*verify) {
            std::ifstream is(verify_path);
            if (!is) throw spec_invalid_error("cannot read " + verify_path);
            ordered_json j = ordered_json::parse(is);
            run_verify(j);
            std::cout << "ok\n";
        } else if (*search) {
            if (q_list.empty()) q_list = {2, 3, 4, 5};
            auto found = run_search(q_list, max_length, optimal_only, jobs);
            if (format == "json") {
                ordered_json arr = ordered_json::array();
                for (const auto& inst : found) arr.push_back(to_json(inst));
                emit(arr.dump(2), out_path);
            } else if (format == "csv") {
                std::string text = csv_header();
                for (const auto& inst : found)
                    text += "\n" + to_csv(inst.record, inst.spec.s, inst.spec.lambda, inst.spec.uv,
                                          inst.classical_defect);
                emit(text, out_path);
            } else {
                throw spec_invalid_error("unknown emit format '" + format + "'");
            }
        } else if (*table) {
            if (q_list.empty()) q_list = {2, 3, 4, 5};
            auto rows = table_one(q_list, max_length, true);
            if (format == "json") {
                ordered_json arr = ordered_json::array();
                for (const auto& row : rows) arr.push_back(to_json(row));
                emit(arr.dump(2), out_path);
            } else if (format == "csv") {
                std::string text = csv_header();
                for (const auto& row : rows) text += "\n" + to_csv(row);
                emit(text, out_path);
            } else {
                throw spec_invalid_error("unknown emit format '" + format + "'");
            }
        } else if (*cosets) {
            ordered_json j;
            j["N"] = cosets_N;
            j["z"] = cosets_z;
            auto reps = coset_representatives(cosets_N, cosets_z);
            j["representatives"] = reps;
            ordered_json arr = ordered_json::array();
            for (int64_t rep : reps) arr.push_back(to_json(cyclotomic_coset(rep, cosets_N, cosets_z)));
            j["cosets"] = arr;
            emit(j.dump(2), out_path);
        }
    } catch (const spec_invalid_error& ex) {
        std::cerr << ordered_json{{"error", "invalid-input"}, {"message", ex.what()}}.dump() << '\n';
        return 2;
    } catch (const axis_error& ex) {
        std::cerr << ordered_json{{"error", "invalid-input"}, {"message", ex.what()}}.dump() << '\n';
        return 2;
    } catch (const base_not_coprime_error& ex) {
        std::cerr << ordered_json{{"error", "invalid-input"}, {"message", ex.what()}}.dump() << '\n';
        return 2;
    } catch (const error& ex) {
        std::cerr << ordered_json{{"error", "verification"}, {"message", ex.what()}}.dump() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << ordered_json{{"error", "internal"}, {"message", ex.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}
