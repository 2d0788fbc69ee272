// adft: exact slim-normal-basis / ADFT command line tool.
//
// Subcommands: gen-matrix, transform, verify, export-plan, basis.
// All numeric I/O is exact rational strings; there is no floating point.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "adft/adft.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write failure on '" + path + "'");
}

std::string elem_to_string(const adft::CycloElem& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) s += ", ";
        s += adft::rat_to_string(x.coeff(i));
    }
    return s + "]";
}

int cmd_gen_matrix(long n, const std::string& mode, const std::string& out) {
    adft::AdftMatrix m = [&] {
        if (mode == "slim") return adft::adft_matrix_slim(n);
        if (n > 256) throw CLI::ValidationError("--n", "oracle mode is limited to n <= 256");
        return adft::adft_matrix_oracle(adft::slim_nbg(n).theta, n);
    }();
    write_file(out, adft::serialize_matrix(m));
    return kExitOk;
}

int cmd_transform(int t, const std::string& input, const std::string& out, bool emit_count) {
    auto values = adft::parse_vector(read_file(input));
    auto p = adft::plan(t);
    if (static_cast<long>(values.size()) != p.n)
        throw CLI::ValidationError("--input", "expected " + std::to_string(p.n) + " values");
    long executed = 0;
    auto spectrum = adft::execute(p, values, &executed);
    write_file(out, adft::serialize_vector(spectrum));
    if (emit_count) std::cout << executed << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::optional<long> bound) {
    auto results = adft::run_verify_suite(suite, bound);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.ok ? "[ok]   " : "[FAIL] ") << r.name;
        if (!r.ok && !r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        ok = ok && r.ok;
    }
    std::cout << (ok ? "verification passed" : "verification FAILED") << " (" << results.size()
              << " checks)\n";
    return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_export_plan(int t, const std::string& out) {
    write_file(out, adft::export_plan(adft::plan(t)));
    return kExitOk;
}

const char* tag_name(adft::ChiTag tag) {
    switch (tag) {
        case adft::ChiTag::One: return "1";
        case adft::ChiTag::MinusOne: return "-1";
        case adft::ChiTag::Half: return "1/2";
        case adft::ChiTag::QuadSum: return "quadratic-sum";
        case adft::ChiTag::Explicit: return "explicit";
    }
    return "?";
}

int cmd_basis(long n, bool show_coords) {
    auto spec = adft::slim_nbg(n);
    std::cout << "n " << n << "\n";
    std::cout << "degree " << spec.theta.ring()->degree() << "\n";
    std::cout << "theta " << elem_to_string(spec.theta) << "\n";
    std::cout << "trace " << adft::rat_to_string(adft::trace(spec.theta)) << "\n";
    std::cout << "slim " << (adft::is_slim(spec.theta, n) ? "yes" : "no") << "\n";
    if (show_coords) {
        for (std::size_t i = 0; i < spec.coords.size(); ++i) {
            const auto& chi = spec.coords.char_at(i);
            std::cout << "coord " << i << " conductor " << chi.conductor() << " order "
                      << chi.order() << " tag " << tag_name(spec.coords.value_at(i).tag())
                      << " value " << elem_to_string(spec.coords.materialized(i)) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact slim normal bases and addition-only base-field Fourier transforms"};
    app.require_subcommand(1);

    long gm_n = 0;
    std::string gm_mode, gm_out;
    auto* gen = app.add_subcommand("gen-matrix", "write a transform matrix file");
    gen->add_option("--n", gm_n, "modulus")->required()->check(CLI::PositiveNumber);
    gen->add_option("--mode", gm_mode, "slim | oracle")
        ->required()
        ->check(CLI::IsMember({"slim", "oracle"}));
    gen->add_option("--out", gm_out, "output path")->required();

    int tr_t = 0;
    std::string tr_in, tr_out;
    bool tr_count = false;
    auto* tr = app.add_subcommand("transform", "apply the fast transform to a vector file");
    tr->add_option("--t", tr_t, "log2 of the transform size")->required()->check(CLI::Range(1, 20));
    tr->add_option("--input", tr_in, "input vector file")->required();
    tr->add_option("--out", tr_out, "output vector file")->required();
    tr->add_flag("--count", tr_count, "print the number of additions performed");

    std::string vf_suite;
    std::optional<long> vf_bound;
    auto* vf = app.add_subcommand("verify", "run an identity suite");
    vf->add_option("--suite", vf_suite, "slim | gauss | leopoldt | kron | fadft | all")
        ->required()
        ->check(CLI::IsMember({"slim", "gauss", "leopoldt", "kron", "fadft", "all"}));
    vf->add_option("--bound", vf_bound,
                   "size limit (modulus, or log2 size for fadft); ignored by 'all'");

    int ep_t = 0;
    std::string ep_out;
    auto* ep = app.add_subcommand("export-plan", "write the straight-line transform program");
    ep->add_option("--t", ep_t, "log2 of the transform size")->required()->check(CLI::Range(1, 20));
    ep->add_option("--out", ep_out, "output path")->required();

    long bs_n = 0;
    bool bs_coords = false;
    auto* bs = app.add_subcommand("basis", "print the slim generator for a modulus");
    bs->add_option("--n", bs_n, "modulus")->required()->check(CLI::PositiveNumber);
    bs->add_flag("--show-coords", bs_coords, "also print the per-character coordinates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen_matrix(gm_n, gm_mode, gm_out);
        if (tr->parsed()) return cmd_transform(tr_t, tr_in, tr_out, tr_count);
        if (vf->parsed()) return cmd_verify(vf_suite, vf_bound);
        if (ep->parsed()) return cmd_export_plan(ep_t, ep_out);
        if (bs->parsed()) return cmd_basis(bs_n, bs_coords);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
