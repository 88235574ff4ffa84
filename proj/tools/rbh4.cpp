// rbh4 -- exact-arithmetic engine for Rota-Baxter operators on the Sweedler
// algebra H4, its adjoint Lie algebra and its Jordan algebra.
//
// Exit codes: 0 pass/success, 1 usage or I/O error, 2 mathematical failure
// (nonzero residual or violated constraint).

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <unordered_set>

#include "rbh4/jsonio.hpp"
#include "rbh4/search.hpp"

using namespace rbh4;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMathFail = 2;

struct Output {
    std::string path;  // empty = stdout
    bool timestamp = true;

    void emit(json doc) const {
        if (timestamp) doc["generated_at"] = now();
        write(doc.dump(2) + "\n");
    }
    void emit_lines(const std::vector<json>& lines) const {
        std::string buf;
        for (const auto& l : lines) buf += l.dump() + "\n";
        write(buf);
    }
    static std::string now() {
        auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
        return buf;
    }

  private:
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << text;
    }
};

long long field_prime(const std::string& field) {
    if (field == "F3") return 3;
    if (field == "F5") return 5;
    if (field == "F7") return 7;
    throw CLI::ValidationError("--field", "expected Q, F3, F5 or F7");
}

json parse_matrix_arg(const std::string& arg) {
    std::ifstream in(arg);
    std::string text;
    if (in.good()) {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        text = arg;  // inline JSON
    }
    return json::parse(text);
}

template <typename Ctx>
Matrix<typename Ctx::Scalar> matrix_from_json(const json& rows, size_t dim, const Ctx& ctx) {
    if (!rows.is_array() || rows.size() != dim)
        throw std::invalid_argument("matrix: expected " + std::to_string(dim) + " rows");
    Matrix<typename Ctx::Scalar> m(dim, ctx.from_int(0));
    for (size_t r = 0; r < dim; ++r) {
        if (!rows[r].is_array() || rows[r].size() != dim)
            throw std::invalid_argument("matrix row " + std::to_string(r) + ": expected " +
                                        std::to_string(dim) + " entries");
        for (size_t c = 0; c < dim; ++c)
            m.at(r, c) = ctx.parse(rows[r][c].get<std::string>());
    }
    return m;
}

AlgebraKind kind_from_name(const std::string& name) {
    if (name == "associative") return AlgebraKind::Associative;
    if (name == "lie") return AlgebraKind::Lie;
    if (name == "jordan") return AlgebraKind::Jordan;
    throw CLI::ValidationError("--kind", "expected auto, associative, lie or jordan");
}

template <typename Body>
int with_field(const std::string& field, Body body) {
    if (field == "Q") return body(QCtx{});
    return body(FpCtx{field_prime(field)});
}

int cmd_verify_family(const std::string& id, const std::string& mode, const Output& out) {
    const Family& f = find_family(id);
    RFCtx rf;
    auto spec = algebra_by_id(f.algebra, rf);
    json doc{{"family", f.id}, {"algebra", f.algebra}, {"mode", mode}};
    if (mode == "symbolic") {
        auto v = verify_symbolic(f);
        doc["report"] = to_json(spec, v.report);
        if (v.record) doc["discrepancy"] = to_json(*v.record, spec.basis_labels());
        out.emit(doc);
        return v.pass ? kOk : kMathFail;
    }
    // sample mode: instantiate the stored assignment over Q at weight 1
    QCtx q;
    std::map<std::string, Rational> assign;
    for (const auto& [k, v] : f.sample) assign[k] = v;
    auto m = instantiate(f, assign, Rational(1), q);
    auto qspec = algebra_by_id(f.algebra, q);
    auto report = check_rb(qspec, m, Rational(1));
    doc["matrix"] = matrix_to_json(m);
    doc["report"] = to_json(qspec, report);
    out.emit(doc);
    return report.pass ? kOk : kMathFail;
}

int cmd_verify_operator(const std::string& algebra, const std::string& matrix_arg,
                        const std::string& weight, const std::string& field,
                        const std::string& kind, const Output& out) {
    return with_field(field, [&](auto ctx) {
        auto spec = algebra_by_id(algebra, ctx);
        if (kind != "auto" && kind_from_name(kind) != spec.kind())
            throw CLI::ValidationError("--kind", "algebra " + algebra + " is " +
                                                     kind_name(spec.kind()));
        auto m = matrix_from_json(parse_matrix_arg(matrix_arg), spec.dim(), ctx);
        auto lambda = ctx.parse(weight);
        auto report = check_rb(spec, m, lambda);
        json doc{{"algebra", algebra}, {"weight", weight}, {"report", to_json(spec, report)}};
        out.emit(doc);
        return report.pass ? kOk : kMathFail;
    });
}

int cmd_classify(const std::string& algebra, const std::string& matrix_arg,
                 const std::string& weight, const std::string& field, const Output& out) {
    return with_field(field, [&](auto ctx) {
        auto spec = algebra_by_id(algebra, ctx);
        auto m = matrix_from_json(parse_matrix_arg(matrix_arg), spec.dim(), ctx);
        auto lambda = ctx.parse(weight);
        auto report = check_rb(spec, m, lambda);
        if (!report.pass) {
            json doc{{"algebra", algebra},
                     {"error", "operator fails the Rota-Baxter identity"},
                     {"report", to_json(spec, report)}};
            out.emit(doc);
            return kMathFail;
        }
        auto cls = classify(spec, m, lambda);
        json doc{{"algebra", algebra},
                 {"kernel_dim", cls.kernel_dim},
                 {"kernel_tag", cls.kernel_tag},
                 {"image_tag", cls.image_tag},
                 {"kernel_abelian", cls.kernel_abelian},
                 {"bucket", cls.bucket},
                 {"kernel_basis", cls.kernel_basis_text}};
        if (cls.kernel_alpha) doc["kernel_alpha"] = *cls.kernel_alpha;
        if (cls.image_alpha) doc["image_alpha"] = *cls.image_alpha;
        out.emit(doc);
        return kOk;
    });
}

int cmd_search(const ScanConfig& cfg, const Output& out) {
    auto ops = enumerate_all(cfg);
    // annotate each operator with its first matching family
    auto families = families_for_algebra(cfg.algebra);
    std::vector<std::unordered_set<uint64_t>> instance_sets;
    for (const auto* f : families) {
        std::unordered_set<uint64_t> keys;
        for (const auto& m : enumerate_instances(*f, cfg.p, cfg.lambda))
            keys.insert(fp_matrix_key(m));
        instance_sets.push_back(std::move(keys));
    }
    FpCtx ctx{cfg.p};
    size_t dim = algebra_by_id(cfg.algebra, ctx).dim();
    std::vector<json> lines;
    lines.reserve(ops.size());
    for (const auto& op : ops) {
        uint64_t key = fp_matrix_key(operator_matrix(op, dim, cfg.p));
        std::string matched;
        for (size_t i = 0; i < families.size(); ++i)
            if (instance_sets[i].count(key)) {
                matched = families[i]->id;
                break;
            }
        lines.push_back(operator_line(op, matched));
    }
    out.emit_lines(lines);
    return kOk;
}

int cmd_sweep(const std::string& prefix, const Output& out) {
    std::vector<json> lines;
    RFCtx rf;
    for (const auto& f : catalog()) {
        if (!prefix.empty() && f.id.rfind(prefix, 0) != 0) continue;
        auto spec = algebra_by_id(f.algebra, rf);
        auto v = verify_symbolic(f);
        json line{{"family", f.id}, {"verdict", v.pass ? "pass" : "fail"}};
        if (v.record) line["discrepancy"] = to_json(*v.record, spec.basis_labels());
        lines.push_back(std::move(line));
    }
    if (lines.empty()) throw UnknownFamily(prefix);
    out.emit_lines(lines);
    for (const auto& l : lines)
        if (l["verdict"] == "fail") return kMathFail;
    return kOk;
}

int cmd_coverage(const ScanConfig& cfg, const Output& out) {
    auto ops = enumerate_all(cfg);
    auto rep = coverage(ops, cfg);
    json doc = to_json(rep);
    doc["algebra"] = cfg.algebra;
    doc["field"] = "F" + std::to_string(cfg.p);
    doc["weight"] = cfg.lambda;
    out.emit(doc);
    return kOk;
}

int cmd_compare(long long p, long long lambda, unsigned jobs, const Output& out) {
    auto res = compare_lie_vs_assoc(p, lambda, jobs);
    FpCtx ctx{p};
    auto h4 = make_h4(ctx);
    std::vector<json> lines;
    lines.reserve(res.lie_not_assoc.size());
    for (const auto& pair : res.lie_not_assoc) {
        json entries = json::array(), assoc_entries = json::array();
        for (auto e : pair.op.entries) entries.push_back(std::to_string(e));
        for (auto e : pair.assoc_entries) assoc_entries.push_back(std::to_string(e));
        Matrix<Fp> am(4, ctx.from_int(0));
        for (size_t r = 0; r < 4; ++r)
            for (size_t c = 0; c < 4; ++c)
                am.at(r, c) = ctx.from_int(pair.assoc_entries[r * 4 + c]);
        auto assoc_report = check_rb(h4, am, ctx.from_int(lambda));
        lines.push_back(json{{"matrix", entries},
                             {"kernel_dim", pair.op.kernel_dim},
                             {"lie", json{{"verdict", "pass"}, {"residuals", json::array()}}},
                             {"matrix_xgx", assoc_entries},
                             {"assoc", to_json(h4, assoc_report)}});
    }
    out.emit_lines(lines);
    return res.lie_not_assoc.empty() ? kMathFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rota-Baxter operator engine for the Sweedler algebra H4"};
    app.require_subcommand(1);
    app.fallthrough();  // let --out / --no-timestamp follow the subcommand

    std::string out_path;
    bool no_timestamp = false;
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_flag("--no-timestamp", no_timestamp, "omit the generated_at field");

    std::string family_id, mode = "symbolic";
    auto* vf = app.add_subcommand("verify-family", "symbolically verify a catalog family");
    vf->add_option("id", family_id, "family id, e.g. lm2.1.10")->required();
    vf->add_option("--mode", mode, "symbolic | sample")
        ->check(CLI::IsMember({"symbolic", "sample"}));

    std::string algebra = "h4minus", matrix_arg, weight = "1", field = "Q", kind = "auto";
    auto* vo = app.add_subcommand("verify-operator", "check one operator matrix");
    vo->add_option("--algebra", algebra, "h4 | h4minus | h4plus | lm2 | lm3")->required();
    vo->add_option("--matrix", matrix_arg, "path, '-' for stdin, or inline JSON")->required();
    vo->add_option("--weight", weight, "weight scalar in the active field");
    vo->add_option("--field", field, "Q | F3 | F5 | F7");
    vo->add_option("--kind", kind, "auto | associative | lie | jordan");

    auto* cl = app.add_subcommand("classify", "classify a verified operator by kernel");
    cl->add_option("--algebra", algebra, "h4 | h4minus | h4plus | lm2 | lm3")->required();
    cl->add_option("--matrix", matrix_arg, "path, '-' for stdin, or inline JSON")->required();
    cl->add_option("--weight", weight, "weight scalar in the active field");
    cl->add_option("--field", field, "Q | F3 | F5 | F7");

    std::string sfield = "F3", sweight = "1";
    unsigned jobs = 1;
    auto* se = app.add_subcommand("search", "exhaustively enumerate operators over F_p");
    se->add_option("--algebra", algebra)->required();
    se->add_option("--field", sfield, "F3 | F5 | F7");
    se->add_option("--weight", sweight, "nonzero weight in the field");
    se->add_option("--jobs", jobs, "worker count");
    auto* co = app.add_subcommand("coverage", "match an exhaustive scan against the catalog");
    co->add_option("--algebra", algebra)->required();
    co->add_option("--field", sfield, "F3 | F5 | F7");
    co->add_option("--weight", sweight, "nonzero weight in the field");
    co->add_option("--jobs", jobs, "worker count");

    auto* cp = app.add_subcommand(
        "compare", "operators passing the Lie check but failing the associative one");
    cp->add_option("--field", sfield, "F3");
    cp->add_option("--weight", sweight, "nonzero weight in the field");
    cp->add_option("--jobs", jobs, "worker count");

    std::string sweep_prefix;
    auto* sw = app.add_subcommand("sweep",
                                  "verify every catalog family; one JSON line per verdict");
    sw->add_option("--family", sweep_prefix, "only families whose id starts with this prefix");

    auto* ec = app.add_subcommand("export-catalog", "dump the family catalog as JSON");
    std::string export_algebra;
    auto* ea = app.add_subcommand("export-algebra", "dump one algebra spec as JSON");
    ea->add_option("--algebra", export_algebra)->required();

    CLI11_PARSE(app, argc, argv);
    Output out{out_path, !no_timestamp};

    try {
        if (vf->parsed()) return cmd_verify_family(family_id, mode, out);
        if (vo->parsed()) return cmd_verify_operator(algebra, matrix_arg, weight, field, kind, out);
        if (cl->parsed()) return cmd_classify(algebra, matrix_arg, weight, field, out);
        if (se->parsed() || co->parsed()) {
            long long p = field_prime(sfield);
            ScanConfig cfg{algebra, p, Fp::parse(sweight, p).value(), jobs, 4};
            return se->parsed() ? cmd_search(cfg, out) : cmd_coverage(cfg, out);
        }
        if (cp->parsed()) {
            long long p = field_prime(sfield);
            return cmd_compare(p, Fp::parse(sweight, p).value(), jobs, out);
        }
        if (sw->parsed()) return cmd_sweep(sweep_prefix, out);
        if (ec->parsed()) {
            json doc = json::array();
            for (const auto& f : catalog()) doc.push_back(to_json(f));
            out.emit_lines({doc});
            return kOk;
        }
        if (ea->parsed()) {
            QCtx q;
            out.emit(to_json(algebra_by_id(export_algebra, q)));
            return kOk;
        }
    } catch (const UnknownFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFail;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
