// rmot: command line driver.  Exit 0 = pass, 1 = mathematical failure, 2 = usage.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rmot/a1.hpp"
#include "rmot/a1cls.hpp"
#include "rmot/io.hpp"
#include "rmot/obstruction.hpp"
#include "rmot/realize.hpp"
#include "rmot/smith.hpp"

using namespace rmot;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_table(const FModule& m) {
    for (const auto& g : m.generators()) std::cout << "  " << g.name << "  " << to_string(g.deg) << "\n";
    for (const auto& [key, x] : m.table())
        if (!x.is_zero())
            std::cout << "  Sq" << (1 << key.first) << " " << m.gen(key.second).name << " = " << m.str(x) << "\n";
}

void print_table(const ClassicalModule& m, bool rename) {
    auto nm = [&](int g) { return rename ? phi_name(m.gen(g).name) : m.gen(g).name; };
    for (int g = 0; g < static_cast<int>(m.rank()); ++g) std::cout << "  " << nm(g) << "  " << m.gen(g).deg << "\n";
    for (const auto& [key, x] : m.table()) {
        if (x.empty() || (key.first & (key.first - 1))) continue;
        std::cout << "  Sq" << key.first << " " << nm(key.second) << " =";
        for (size_t i = 0; i < x.size(); ++i) std::cout << (i ? " + " : " ") << nm(x[i]);
        std::cout << "\n";
    }
}

StructureVector vec(const std::string& s) {
    try {
        return StructureVector::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--vector: ") + e.what());
    }
}

int cmd_adem(const std::string& expr) {
    try {
        std::cout << element_str(parse_element(expr)) << "\n";
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    return 0;
}

int cmd_enumerate(const std::string& json_out) {
    int checked = 0;
    auto all = enumerate_structures(&checked);
    std::cout << all.size() << " structures (" << checked << " candidates checked)\n";
    if (!json_out.empty()) {
        json arr = json::array();
        for (const auto& e : all) arr.push_back({{"vector", e.v.str()}, {"module", module_to_json(e.module)}});
        std::ofstream(json_out) << arr.dump(1) << "\n";
    }
    return all.size() == 128 ? 0 : 1;
}

int cmd_show(const std::string& v, bool dot, bool as_json) {
    FModule m = from_vector(vec(v));
    if (as_json) std::cout << module_to_json(m).dump(1) << "\n";
    else if (dot) std::cout << module_to_dot(m, "A1[" + v + "]");
    else {
        std::cout << "A1[" << v << "]\n";
        print_table(m);
    }
    return m.validate().empty() ? 0 : 1;
}

int cmd_cofiber(const std::string& v) {
    StructureVector sv = vec(v);
    SesSplit s = ses_split(sv);
    std::cout << "epsilon = " << s.epsilon << ", delta = " << s.delta << "\n";
    std::cout << "v: S^{2,1} Y(" << s.epsilon << ",1) -> Y(" << s.delta << ",1)\n";
    std::cout << "sub:\n";
    print_table(s.sub);
    std::cout << "quotient:\n";
    print_table(s.quot);
    return s.epsilon == epsilon_formula(sv) && s.delta == delta_formula(sv) ? 0 : 1;
}

int cmd_realize(const std::string& which, const std::string& v, bool dot, bool as_json) {
    StructureVector sv = vec(v);
    const bool phi = which == "phi";
    ClassicalModule cm = phi ? geometric_fixed_points(from_vector(sv)) : underlying(from_vector(sv));
    auto viol = cm.validate();
    if (as_json) std::cout << classical_to_json(cm).dump(1) << "\n";
    else if (dot) std::cout << classical_to_dot(cm, which + "[" + v + "]");
    else {
        print_table(cm, phi);
        if (!phi) {
            A1Type t = a1_type(cm);
            std::cout << "type A1[" << t.i << "," << t.j << "]\n";
        }
    }
    for (const auto& s : viol) std::cerr << "adem: " << s << "\n";
    return viol.empty() ? 0 : 1;
}

int cmd_build_a2(bool verify) {
    const A2Build& a2 = build_A2();
    FreenessResult fr = freeness_certificate(a2.module, 2);
    std::cout << "rank " << a2.module.rank() << ", bottom " << to_string(a2.bottom_unshifted) << ", top "
              << to_string(a2.top_unshifted) << " (before the (5,1) shift)\n";
    std::cout << "degree (5,1) NYDs with nonzero image: " << a2.degree51_nonzero
              << (a2.degree51_images_equal ? ", all images equal\n" : ", images differ\n");
    std::cout << "over A(2): " << (fr.free ? "free of rank " + std::to_string(fr.rank) : "not free: " + fr.witness)
              << ", reduced dim " << fr.reduced_dim << "\n";
    bool ok = a2.module.rank() == 64 && fr.free && fr.rank == 1;
    if (verify) {
        auto show = [&](const IdentityCheck& c) {
            std::cout << (c.ok ? "  ok    " : "  FAIL  ") << c.name << "\n";
            if (!c.ok && !c.lhs.empty()) std::cout << "        lhs: " << c.lhs << "\n        rhs: " << c.rhs << "\n";
            ok = ok && c.ok;
        };
        std::cout << "iota actions\n";
        for (const auto& c : iota_actions()) show(c);
        std::cout << "Sq8 closure\n";
        for (const auto& c : check_sq8_closure()) show(c);
        Q2NonClosure r = check_q2_nonclosure();
        std::cout << "Sq8 Q2 iota: expansion " << (r.expansion_matches ? "matches" : "differs") << ", basis "
                  << (r.basis_ok ? "ok" : "bad") << ", span dim " << r.span_dim << ", "
                  << (r.outside ? "outside the span" : "INSIDE the span") << "\n";
        ok = ok && r.expansion_matches && r.basis_ok && r.outside;
        const BtildeBuild& b = build_Btilde2();
        BtildeSes ses = check_btilde_ses();
        std::cout << "B~(2): rank " << b.module.rank() << ", " << ses.detail << "\n";
        ok = ok && b.module.rank() == 32 && ses.counts_add_up && b.words_consistent;
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_iota_table() {
    const TensorElement iota = iota_tensor();
    const auto& q = milnor_primitives();
    for (const auto& [name, terms] : iota_golden()) {
        std::string body;
        for (const auto& t : terms) {
            if (!body.empty()) body += " + ";
            std::string c = GroundElement(t.coef).str();
            body += (c == "1" ? "" : c + " ") + t.nyd;
        }
        TensorElement got;
        if (name == "iota") got = iota;
        else if (name == "Sq1") got = tensor_act_sq(1, iota);
        else if (name == "Sq2") got = tensor_act_sq(2, iota);
        else if (name == "Sq4") got = tensor_act_sq(4, iota);
        else if (name == "Q2tilde") got = tensor_act(q.Q2tilde, iota);
        else if (name == "Q2") got = tensor_act(q.Q2, iota);
        else if (name == "Sq8Q2") got = tensor_act_sq(8, tensor_act(q.Q2, iota));
        bool ok = got == golden_value(terms);
        std::cout << (ok ? "ok   " : "FAIL ") << name << " = R(" << body << ")\n";
        if (!ok) return 1;
    }
    return 0;
}

int cmd_scan(const std::string& inst, const std::string& mode_s) {
    Instance in;
    ScanMode mode;
    try {
        in = obstruction_instance(inst);
        mode = parse_mode(mode_s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    ScanResult r = window_scan(in.e1, in.D, mode);
    std::cout << "instance " << inst << ", " << mode_str(mode) << " (shift " << scan_shift(mode) << ", f >= "
              << scan_fmin(mode) << ")\n";
    for (const auto& p : r.points)
        std::cout << "  " << to_string(p.target) << "  "
                  << (p.witness ? p.witness->monomial() + "  (i=" + std::to_string(p.witness->i) + ")" : "-") << "\n";
    if (!r.sufficient) std::cout << "warning: " << r.note << "\n";
    if (r.empty) std::cout << "EMPTY (Toda condition satisfied)\n";
    else std::cout << "WITNESS " << r.witness->monomial() << " at " << to_string(r.witness->target) << "\n";
    return r.sufficient ? 0 : 1;
}

int cmd_verify(const std::string& tag) {
    std::vector<std::string> tags = tag == "all" ? theorem_tags() : std::vector<std::string>{tag};
    bool ok = true;
    for (const auto& t : tags) {
        json r;
        try {
            r = verify_theorem(t);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::cout << r.dump(tag == "all" ? -1 : 1) << "\n";
        ok = ok && report_passed(r);
    }
    return ok ? 0 : 1;
}

int cmd_validate(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(file + ": " + e.what());
    }
    std::vector<std::string> problems;
    try {
        if (is_classical_json(j)) {
            problems = classical_from_json(j).validate();
        } else {
            for (const auto& v : module_from_json(j).validate()) problems.push_back(v.what + ": " + v.detail);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(file + ": " + e.what());
    } catch (const json::exception& e) {
        throw UsageError(file + ": " + e.what());
    }
    for (const auto& p : problems) std::cout << p << "\n";
    std::cout << (problems.empty() ? "valid" : std::to_string(problems.size()) + " violations") << "\n";
    return problems.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"R-motivic Steenrod algebra toolkit"};
    app.require_subcommand(1);
    int rc = 0;
    std::string expr, vector, which, instance, mode = "existence", tag, file, json_out;
    bool dot = false, as_json = false, verify = false;

    auto* adem = app.add_subcommand("adem", "Adem relations");
    adem->require_subcommand(1);
    auto* reduce = adem->add_subcommand("reduce", "reduce to admissible form");
    reduce->add_option("expr", expr, "e.g. \"Sq2 Sq2\"")->required();
    reduce->callback([&] { rc = cmd_adem(expr); });

    auto* a1 = app.add_subcommand("a1", "the A(1) family");
    a1->require_subcommand(1);
    auto* en = a1->add_subcommand("enumerate", "brute-force enumeration");
    en->add_option("--json", json_out, "write all structures to this file");
    en->callback([&] { rc = cmd_enumerate(json_out); });
    auto* show = a1->add_subcommand("show", "print one structure");
    show->add_option("--vector", vector, "a,b,c,d,e,f,g")->required();
    show->add_flag("--dot", dot);
    show->add_flag("--json", as_json);
    show->callback([&] { rc = cmd_show(vector, dot, as_json); });
    auto* cof = a1->add_subcommand("cofiber", "short exact sequence and flags");
    cof->add_option("--vector", vector)->required();
    cof->callback([&] { rc = cmd_cofiber(vector); });

    auto* re = app.add_subcommand("realize", "underlying or geometric fixed points");
    re->add_option("which", which)->required()->check(CLI::IsMember({"underlying", "phi"}));
    re->add_option("--vector", vector)->required();
    re->add_flag("--dot", dot);
    re->add_flag("--json", as_json);
    re->callback([&] { rc = cmd_realize(which, vector, dot, as_json); });

    auto* sm = app.add_subcommand("smith", "the Smith construction");
    sm->require_subcommand(1);
    auto* b2 = sm->add_subcommand("build-a2", "build e(K^6)");
    b2->add_flag("--verify", verify, "run every identity check");
    b2->callback([&] { rc = cmd_build_a2(verify); });
    sm->add_subcommand("iota-table", "closed forms on the bottom class")->callback([&] { rc = cmd_iota_table(); });

    auto* ob = app.add_subcommand("obstruction", "May E1 window scans");
    ob->require_subcommand(1);
    auto* scan = ob->add_subcommand("scan", "run a scan");
    scan->add_option("--instance", instance, "a1|b1|z")->required();
    scan->add_option("--mode", mode, "existence|uniqueness");
    scan->callback([&] { rc = cmd_scan(instance, mode); });

    auto* ve = app.add_subcommand("verify", "named end-to-end checks");
    ve->add_option("--theorem", tag, "tag, or 'all'")->required();
    ve->callback([&] { rc = cmd_verify(tag); });

    auto* mo = app.add_subcommand("module", "module files");
    mo->require_subcommand(1);
    auto* val = mo->add_subcommand("validate", "Adem-check a JSON module");
    val->add_option("file", file)->required();
    val->callback([&] { rc = cmd_validate(file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
