#include <tproduct/cli.hpp>

#include <tproduct/bench.hpp>
#include <tproduct/factorizations.hpp>
#include <tproduct/io.hpp>
#include <tproduct/norms_prox.hpp>
#include <tproduct/tprod_ops.hpp>
#include <tproduct/verify_suite.hpp>

#include <CLI11.hpp>

#include <functional>
#include <limits>
#include <ostream>
#include <vector>

namespace tproduct::cli {

namespace {

void print_scalar(std::ostream& out, double x) {
    const auto old = out.precision(17);
    out << x << '\n';
    out.precision(old);
}

Shape parse_dims(const std::vector<std::size_t>& dims) {
    if (dims.size() != 3) throw CLI::ValidationError("--dims", "expected three comma separated extents");
    return Shape{dims[0], dims[1], dims[2]};
}

std::string suffixed(const std::string& prefix, const char* suffix) { return prefix + suffix + ".tns3"; }

}  // namespace

int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tensor-tensor product toolbox for dense 3-way tensors", "tproduct"};
    app.require_subcommand(1);

    std::string input, input2, output, prefix;
    std::size_t n = 0, n3 = 0;
    double tau = 0.0;
    std::optional<double> rtol;
    std::vector<std::size_t> dims{3, 3, 4};
    std::size_t l = 2, trials = 10, repeats = 3;
    std::uint64_t seed = 0;
    std::size_t bench_n1 = 32, bench_n2 = 32, bench_l = 32;
    std::vector<std::size_t> bench_n3{8, 16, 32};

    std::function<int()> action;
    const auto command = [&](const char* name, const char* help, std::function<int()> body) {
        auto* sub = app.add_subcommand(name, help);
        sub->callback([&action, body = std::move(body)] { action = body; });
        return sub;
    };
    const auto load = [](const std::string& path) { return io::read_tensor(std::filesystem::path(path)); };
    const auto save = [](const std::string& path, const Tensor3& t) { io::write_tensor(std::filesystem::path(path), t); };

    auto* tprod_cmd = command("tprod", "t-product of --input and --input2", [&] {
        save(output, tprod(load(input), load(input2)));
        return kOk;
    });
    tprod_cmd->add_option("--input", input, "left operand (n1 x n2 x n3)")->required();
    tprod_cmd->add_option("--input2", input2, "right operand (n2 x l x n3)")->required();
    tprod_cmd->add_option("--output", output)->required();

    auto* tran_cmd = command("tran", "conjugate tensor transpose", [&] {
        save(output, tran(load(input)));
        return kOk;
    });
    tran_cmd->add_option("--input", input)->required();
    tran_cmd->add_option("--output", output)->required();

    auto* teye_cmd = command("teye", "identity tensor", [&] {
        save(output, teye(n, n3));
        return kOk;
    });
    teye_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    teye_cmd->add_option("--n3", n3)->required()->check(CLI::PositiveNumber);
    teye_cmd->add_option("--output", output)->required();

    auto* tinv_cmd = command("tinv", "tensor inverse", [&] {
        const Tensor3 a = load(input);
        Tolerance tol = Tolerance::defaults(a.shape());
        if (rtol) tol = tol.with_inv_rtol(*rtol);
        save(output, tinv(a, tol));
        return kOk;
    });
    tinv_cmd->add_option("--input", input)->required();
    tinv_cmd->add_option("--output", output)->required();
    tinv_cmd->add_option("--rtol", rtol, "singularity threshold relative to the spectral norm");

    auto* tsvd_cmd = command("tsvd", "t-SVD, writes <prefix>_U/_S/_V.tns3", [&] {
        const auto f = tsvd(load(input));
        save(suffixed(prefix, "_U"), f.u);
        save(suffixed(prefix, "_S"), f.s);
        save(suffixed(prefix, "_V"), f.v);
        return kOk;
    });
    tsvd_cmd->add_option("--input", input)->required();
    tsvd_cmd->add_option("--output-prefix", prefix)->required();

    auto* tqr_cmd = command("tqr", "t-QR, writes <prefix>_Q/_R.tns3", [&] {
        const auto f = tqr(load(input));
        save(suffixed(prefix, "_Q"), f.q);
        save(suffixed(prefix, "_R"), f.r);
        return kOk;
    });
    tqr_cmd->add_option("--input", input)->required();
    tqr_cmd->add_option("--output-prefix", prefix)->required();

    auto* rank_cmd = command("tubalrank", "tensor tubal rank", [&] {
        const Tensor3 a = load(input);
        Tolerance tol = Tolerance::defaults(a.shape());
        if (rtol) tol = tol.with_rank_rtol(*rtol);
        out << tubal_rank(a, tol) << '\n';
        return kOk;
    });
    rank_cmd->add_option("--input", input)->required();
    rank_cmd->add_option("--rtol", rtol, "rank threshold relative to the largest singular value");

    auto* tsn_cmd = command("tsn", "tensor spectral norm", [&] {
        print_scalar(out, tsn(load(input)));
        return kOk;
    });
    tsn_cmd->add_option("--input", input)->required();

    auto* tnn_cmd = command("tnn", "tensor nuclear norm", [&] {
        print_scalar(out, tnn(load(input)));
        return kOk;
    });
    tnn_cmd->add_option("--input", input)->required();

    auto* prox_cmd = command("prox-tnn", "proximal operator of tau * tnn", [&] {
        save(output, prox_tnn(load(input), tau));
        return kOk;
    });
    prox_cmd->add_option("--input", input)->required();
    prox_cmd->add_option("--tau", tau)->required();
    prox_cmd->add_option("--output", output)->required();

    auto* verify_cmd = command("verify", "check fast paths against the block circulant oracles", [&] {
        verify::VerifyOptions opts;
        opts.dims = parse_dims(dims);
        opts.l = l;
        opts.trials = trials;
        opts.seed = seed;
        if (!input.empty()) opts.a = load(input);
        if (!input2.empty()) opts.b = load(input2);
        out << "seed " << seed << '\n';
        bool ok = true;
        for (const auto& r : verify::run_verify(opts)) {
            ok = ok && r.passed();
            out << (r.passed() ? "PASS " : "FAIL ") << r.name << " worst=" << r.worst << " threshold=" << r.threshold
                << '\n';
        }
        return ok ? kOk : kVerifyFailed;
    });
    verify_cmd->add_option("--input", input, "also check this tensor");
    verify_cmd->add_option("--input2", input2, "right t-product operand for --input");
    verify_cmd->add_option("--dims", dims, "n1,n2,n3 of the random inputs")->delimiter(',')->expected(3);
    verify_cmd->add_option("--l", l, "lateral size of the random right operands")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);

    auto* bench_cmd = command("bench", "time tprod against the bcirc path, CSV to stdout", [&] {
        err << "seed " << seed << '\n';
        Rng rng(seed);
        bench::write_csv_header(out);
        for (const std::size_t depth : bench_n3)
            bench::write_csv_row(out, bench::run_case({bench_n1, bench_n2, bench_l, depth}, repeats, rng));
        return kOk;
    });
    bench_cmd->add_option("--n1", bench_n1)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--n2", bench_n2)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--l", bench_l)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--n3", bench_n3, "comma separated list of depths")->delimiter(',');
    bench_cmd->add_option("--repeats", repeats);
    bench_cmd->add_option("--seed", seed);

    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const auto& a : argv) raw.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const ShapeMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidTau& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const SingularTensor& e) {
        err << "error: " << e.what() << '\n';
        return kSingular;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace tproduct::cli
