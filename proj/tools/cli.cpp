#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hive/json_io.hpp"

namespace hive::cli {

namespace {

struct Request {
    int n = 0;
    std::string lambda, mu, nu;
    std::string format = "text";
    std::string output;
    unsigned threads = 0;
    int max_degree = -1;
    std::string method = "both";
    std::string hive;
    std::string export_format = "appendix-inequalities";
    bool all = false;
    bool check = false;
};

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Partition partition_arg(const std::string& flag, const std::string& text, int n) {
    Partition p;
    try {
        p = parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw DomainError(flag + ": " + e.what());
    }
    if (static_cast<int>(p.length()) > n)
        throw DomainError(flag + ": " + to_string(p) + " has more than n = " + std::to_string(n) + " parts");
    return p;
}

struct Triple {
    Partition lambda, mu, nu;
};

Triple triple(const Request& r) {
    return {partition_arg("--lambda", r.lambda, r.n), partition_arg("--mu", r.mu, r.n),
            partition_arg("--nu", r.nu, r.n)};
}

Hive hive_arg(const Request& r) {
    std::vector<Entry> entries;
    std::stringstream ss(r.hive);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            entries.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("--hive: not an integer: \"" + item + "\"");
        }
    }
    if (static_cast<int>(entries.size()) != triangle_size(r.n))
        throw DomainError("--hive: expected " + std::to_string(triangle_size(r.n)) + " entries for n = " +
                          std::to_string(r.n) + ", got " + std::to_string(entries.size()));
    return Hive::from_flat(r.n, entries);
}

std::string flat_string(const Hive& h) {
    std::string s;
    for (Entry e : h.flat()) s += (s.empty() ? "" : ",") + std::to_string(e);
    return s;
}

std::string sum_string(const std::vector<int>& indices) {
    if (indices.empty()) return "0";
    std::string s;
    for (int i : indices) s += (s.empty() ? "h" : " + h") + std::to_string(i);
    return s;
}

std::string check_lines(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    int passed = 0;
    for (const auto& c : checks) {
        passed += c.passed;
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
    }
    os << passed << " of " << checks.size() << " checks passed\n";
    return os.str();
}

struct Output {
    std::string text;
    json data;
    int code = kSuccess;
    std::string error; ///< printed to err when code != kSuccess
};

Output lrcoef(const Request& r) {
    auto [lambda, mu, nu] = triple(r);
    const auto c = lr_coefficient(r.n, lambda, mu, nu);
    Output o{std::to_string(c) + "\n",
             {{"n", r.n}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"coefficient", c}}, kSuccess, {}};
    if (r.check) {
        const auto tableaux = static_cast<std::int64_t>(enumerate_tableaux(r.n, lambda, mu, nu).size());
        const auto schur = lr_via_schur(r.n, lambda, mu, nu);
        o.data["tableaux"] = tableaux;
        o.data["schur"] = schur;
        if (tableaux != c || schur != c) {
            o.code = kConsistencyFailure;
            o.error = "hives " + std::to_string(c) + ", tableaux " + std::to_string(tableaux) + ", Schur oracle " +
                      std::to_string(schur);
        }
    }
    return o;
}

Output hives(const Request& r) {
    std::vector<Hive> list;
    if (!r.lambda.empty() || !r.mu.empty() || !r.nu.empty()) {
        auto [lambda, mu, nu] = triple(r);
        list = enumerate_hives(r.n, lambda, mu, nu);
    } else if (r.max_degree >= 0) {
        list = hives_up_to_degree(r.n, r.max_degree, r.threads);
    } else {
        throw DomainError("hives: give --lambda/--mu/--nu or --max-degree");
    }
    Output o;
    json arr = json::array();
    for (const auto& h : list) {
        o.text += render(h.array()) + "\n";
        arr.push_back(to_json(h));
    }
    o.text += std::to_string(list.size()) + " hives\n";
    o.data = {{"n", r.n}, {"count", list.size()}, {"hives", arr}};
    return o;
}

Output tableaux(const Request& r) {
    auto [lambda, mu, nu] = triple(r);
    Output o;
    json arr = json::array();
    for (const auto& t : enumerate_tableaux(r.n, lambda, mu, nu)) {
        o.text += render(t) + "\n";
        arr.push_back(to_json(t));
    }
    o.data = {{"n", r.n}, {"count", arr.size()}, {"tableaux", arr}};
    return o;
}

Output hp_series(const Request& r) {
    const int d = r.max_degree < 0 ? 9 : r.max_degree;
    const bool closed_available = r.n <= 4;
    if (r.method == "closed" && !closed_available)
        throw DomainError("--method closed: closed-form data exist for n = 2, 3, 4 only");
    std::optional<SeriesPrefix> enumerated, closed;
    if (r.method != "closed") enumerated = hp_series_enumerated(r.n, d, r.threads);
    if (r.method != "enum" && closed_available) {
        auto data = closed_form_data(r.n);
        closed = hp_series_closed_form(data.numerator, data.denominator_exponents, d);
    }
    const SeriesPrefix& s = enumerated ? *enumerated : *closed;
    Output o{s.coefficient_list() + "\n", series_to_json(r.n, s), kSuccess, {}};
    if (enumerated && closed) {
        o.data["closed_form_agrees"] = *enumerated == *closed;
        if (*enumerated != *closed) {
            o.code = kConsistencyFailure;
            o.error = "closed form gives " + closed->coefficient_list();
        }
    }
    return o;
}

Output hilbert_basis_cmd(const Request& r) {
    const int d = r.max_degree < 0 ? 12 : r.max_degree;
    const auto basis = hilbert_basis(r.n, d, r.threads);
    const auto& pres = cone_presentation(r.n);
    Output o;
    json arr = json::array(), index = json::array();
    std::vector<bool> matched(pres.basis.size());
    bool unknown = false;
    for (const auto& h : basis) {
        int k = 0;
        for (std::size_t i = 0; i < pres.basis.size(); ++i)
            if (pres.basis[i] == h) k = static_cast<int>(i) + 1;
        if (k) matched[k - 1] = true;
        unknown = unknown || !k;
        o.text += (k ? "h" + std::to_string(k) : std::string("new")) + "  degree " + std::to_string(h.degree()) +
                  "  " + flat_string(h) + "\n";
        arr.push_back(to_json(h));
        index.push_back(k);
    }
    bool missing = false;
    for (std::size_t i = 0; i < pres.basis.size(); ++i)
        missing = missing || (!matched[i] && pres.degrees[i] <= d);
    const bool agrees = !unknown && !missing;
    o.text += std::to_string(basis.size()) + " irreducible hives of degree <= " + std::to_string(d) +
              (agrees ? ", matching the published basis\n" : ", DIFFERING from the published basis\n");
    o.data = {{"n", r.n}, {"max_degree", d}, {"basis", arr}, {"published_index", index},
              {"matches_published", agrees}};
    if (!agrees) {
        o.code = kConsistencyFailure;
        o.error = "irreducible hives differ from the published basis";
    }
    return o;
}

Output decompose_cmd(const Request& r) {
    if (r.hive.empty()) throw DomainError("decompose: --hive is required");
    const Hive h = hive_arg(r);
    const auto& pres = cone_presentation(r.n);
    Output o;
    o.data = {{"hive", to_json(h)}};
    if (r.all) {
        json arr = json::array();
        for (const auto& d : all_decompositions(h, pres)) {
            o.text += sum_string(d) + "\n";
            arr.push_back(d);
        }
        o.data["decompositions"] = arr;
    } else {
        auto d = decompose(h, pres);
        o.text = sum_string(d) + "\n";
        o.data["decomposition"] = d;
    }
    return o;
}

Output hwv_cmd(const Request& r) {
    std::vector<HighestWeightVector> vs;
    if (!r.hive.empty()) {
        vs.push_back(highest_weight_vector(r.n, hive_arg(r)));
    } else {
        auto [lambda, mu, nu] = triple(r);
        vs = hwv_basis(r.n, lambda, mu, nu, r.threads);
    }
    Output o;
    json arr = json::array();
    for (const auto& v : vs) {
        o.text += "tableau      " + render(hive_to_tableau(v.hive)) + "\n";
        o.text += "hive         " + flat_string(v.hive) + "\n";
        o.text += "generators   " + sum_string(v.decomposition) + "\n";
        o.text += "initial      " + to_string(v.initial, r.n) + "\n";
        o.text += "polynomial   " + v.polynomial.to_string() + "\n\n";
        arr.push_back(to_json(v));
    }
    o.text += std::to_string(vs.size()) + " highest weight vectors\n";
    o.data = {{"n", r.n}, {"vectors", arr}};
    return o;
}

Output verify_cmd(const Request& r) {
    std::vector<CheckResult> checks;
    for (const auto& rc : verify_relations(cone_presentation(r.n))) {
        std::string detail = "holds";
        if (!rc.holds)
            detail = "coordinate " + std::to_string(rc.coordinate.value_or(-1)) + ": " +
                     std::to_string(rc.left_value) + " vs " + std::to_string(rc.right_value);
        checks.push_back({"hive relation " + rc.name, rc.holds, detail});
    }
    auto append = [&](std::vector<CheckResult> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    append(verify_generators(r.n));
    append(verify_presentation_relations(r.n));
    if (r.n == 2) append(verify_independence(2));
    append(verify_classical_identities(r.n));

    Output o{check_lines(checks), {}, kSuccess, {}};
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    const bool ok = all_passed(checks);
    o.data = {{"n", r.n}, {"passed", ok}, {"checks", arr}};
    if (!ok) {
        o.code = kConsistencyFailure;
        o.error = "some checks failed";
    }
    return o;
}

Output export_cone(const Request& r) {
    Output o;
    if (r.export_format == "appendix-inequalities") {
        o.text = export_appendix_inequalities(r.n);
    } else if (r.export_format == "appendix-generators") {
        o.text = export_appendix_generators(cone_presentation(r.n));
    } else {
        const auto sys = cone_inequalities(r.n);
        o.text = json{{"n", r.n},
                      {"inequalities", sys.rows},
                      {"equations", sys.equations},
                      {"presentation", to_json(cone_presentation(r.n))}}
                     .dump(2) +
                 "\n";
    }
    o.data = nullptr; // export-cone always writes its own format
    return o;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Littlewood-Richardson coefficients, hives and the tensor product algebra"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hivetool 1.0");
    Request req;

    auto common = [&](CLI::App* sub, int n_lo, int n_hi) {
        sub->add_option("-n", req.n, "rank of GL(n)")->required()->check(CLI::Range(n_lo, n_hi));
        sub->add_option("--output", req.output, "write to this file instead of stdout");
        sub->add_option("--threads", req.threads, "worker cap (0 = hardware concurrency)");
        if (sub->get_name() != "export-cone")
            sub->add_option("--format", req.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto partitions = [&](CLI::App* sub, bool required) {
        for (auto [flag, target] : {std::pair{"--lambda", &req.lambda}, {"--mu", &req.mu}, {"--nu", &req.nu}}) {
            auto* opt = sub->add_option(flag, *target, "partition, e.g. 3,2,1");
            if (required) opt->required();
        }
    };

    auto* lr = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient by counting hives");
    common(lr, 2, 8);
    partitions(lr, true);
    lr->add_flag("--check", req.check, "cross-check against LR tableaux and the Schur oracle");

    auto* hv = app.add_subcommand("hives", "list hives with a boundary, or all hives up to a degree");
    common(hv, 2, 8);
    partitions(hv, false);
    hv->add_option("--max-degree", req.max_degree)->check(CLI::NonNegativeNumber);

    auto* tb = app.add_subcommand("tableaux", "list LR tableaux");
    common(tb, 2, 8);
    partitions(tb, true);

    auto* hp = app.add_subcommand("hp-series", "Hilbert-Poincare series coefficients m_0..m_D");
    common(hp, 2, 8);
    hp->add_option("--max-degree", req.max_degree, "D (default 9)")->check(CLI::NonNegativeNumber);
    hp->add_option("--method", req.method, "enum, closed or both")->check(CLI::IsMember({"enum", "closed", "both"}));

    auto* hb = app.add_subcommand("hilbert-basis", "irreducible hives up to a degree");
    common(hb, 2, 4);
    hb->add_option("--max-degree", req.max_degree, "D (default 12)")->check(CLI::NonNegativeNumber);

    auto* dc = app.add_subcommand("decompose", "write a hive over the published Hilbert basis");
    common(dc, 2, 4);
    dc->add_option("--hive", req.hive, "row-major entries h11,h21,h22,...")->required();
    dc->add_flag("--all", req.all, "list every decomposition");

    auto* hw = app.add_subcommand("hwv", "highest weight vectors for a boundary or a single hive");
    common(hw, 2, 4);
    partitions(hw, false);
    hw->add_option("--hive", req.hive, "row-major entries h11,h21,h22,...");

    auto* vf = app.add_subcommand("verify", "check generators, relations and determinantal identities");
    common(vf, 2, 4);

    auto* ex = app.add_subcommand("export-cone", "cone data in Normaliz input format or JSON");
    common(ex, 2, 4);
    ex->add_option("--format", req.export_format)
        ->check(CLI::IsMember({"appendix-inequalities", "appendix-generators", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kDomainError;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    if ((name == "hwv") && req.hive.empty() && (req.lambda.empty() || req.mu.empty() || req.nu.empty())) {
        err << "hwv: give --hive or all of --lambda, --mu, --nu\n";
        return kDomainError;
    }

    Output o;
    try {
        if (name == "lrcoef") o = lrcoef(req);
        else if (name == "hives") o = hives(req);
        else if (name == "tableaux") o = tableaux(req);
        else if (name == "hp-series") o = hp_series(req);
        else if (name == "hilbert-basis") o = hilbert_basis_cmd(req);
        else if (name == "decompose") o = decompose_cmd(req);
        else if (name == "hwv") o = hwv_cmd(req);
        else if (name == "verify") o = verify_cmd(req);
        else o = export_cone(req);
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return kConsistencyFailure;
    } catch (const std::invalid_argument& e) {
        err << name << ": " << e.what() << '\n';
        return kDomainError;
    } catch (const std::out_of_range& e) {
        err << name << ": " << e.what() << '\n';
        return kDomainError;
    } catch (const NoDecomposition& e) {
        err << name << ": " << e.what() << '\n';
        return kDomainError;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kConsistencyFailure;
    }

    const std::string body = (req.format == "json" && !o.data.is_null()) ? o.data.dump(2) + "\n" : o.text;
    if (req.output.empty()) {
        out << body;
    } else {
        std::ofstream file(req.output, std::ios::binary);
        file << body;
        if (!file) {
            err << "--output: cannot write " << req.output << '\n';
            return kDomainError;
        }
    }
    if (o.code != kSuccess) err << name << ": " << o.error << '\n';
    return o.code;
}

} // namespace hive::cli
