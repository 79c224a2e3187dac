#include "varreg/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "varreg/io.hpp"
#include "varreg/oracle.hpp"

namespace varreg {

namespace {

using ojson = nlohmann::ordered_json;

void dump_string(const std::string& s, std::string& out) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        case '\r':
            out += "\\r";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out.push_back(c);
            }
        }
    }
    out.push_back('"');
}

// Canonical compact emission; floats carry 17 significant digits so every
// printed value round-trips and re-emits byte-identically.
void dump_value(const ojson& j, std::string& out) {
    switch (j.type()) {
    case ojson::value_t::object: {
        out.push_back('{');
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out.push_back(',');
            first = false;
            dump_string(it.key(), out);
            out.push_back(':');
            dump_value(it.value(), out);
        }
        out.push_back('}');
        break;
    }
    case ojson::value_t::array: {
        out.push_back('[');
        bool first = true;
        for (const auto& item : j) {
            if (!first)
                out.push_back(',');
            first = false;
            dump_value(item, out);
        }
        out.push_back(']');
        break;
    }
    case ojson::value_t::string:
        dump_string(j.get<std::string>(), out);
        break;
    case ojson::value_t::boolean:
        out += j.get<bool>() ? "true" : "false";
        break;
    case ojson::value_t::number_integer:
        out += std::to_string(j.get<std::int64_t>());
        break;
    case ojson::value_t::number_unsigned:
        out += std::to_string(j.get<std::uint64_t>());
        break;
    case ojson::value_t::number_float:
        out += format_double(j.get<double>());
        break;
    case ojson::value_t::null:
    default:
        out += "null";
        break;
    }
}

std::string dump_json(const ojson& j) {
    std::string out;
    dump_value(j, out);
    return out;
}

ojson complex_json(Complex z) { return ojson::array({z.real(), z.imag()}); }

ojson complex_list_json(const std::vector<Complex>& zs) {
    ojson arr = ojson::array();
    for (const Complex& z : zs)
        arr.push_back(complex_json(z));
    return arr;
}

ojson series_json(const TruncatedSeries& s) {
    ojson j;
    j["center"] = complex_json(s.center());
    ojson coeffs = ojson::array();
    for (const Complex& c : s.coeffs())
        coeffs.push_back(complex_json(c));
    j["coeffs"] = coeffs;
    return j;
}

void check_order_flag(std::size_t expected, int n, const char* what) {
    if (n >= 0 && static_cast<std::size_t>(n) != expected)
        throw InvalidInput("bad_argument",
                           std::string("--n does not match the number of ") + what);
}

struct CommandIo {
    std::ostream& out;
    std::ostream& err;
};

int emit_error(CommandIo io, const std::string& kind, const std::string& message, int code,
               const ojson& extra = ojson::object()) {
    ojson j;
    ojson e;
    e["kind"] = kind;
    e["message"] = message;
    for (auto it = extra.begin(); it != extra.end(); ++it)
        e[it.key()] = it.value();
    j["error"] = e;
    io.out << dump_json(j) << "\n";
    io.err << "error (" << kind << "): " << message << "\n";
    return code;
}

int cmd_disk(CommandIo io, const std::string& z0_text, const std::string& gammas_text, int n) {
    const HyperbolicData data(parse_complex(z0_text), parse_complex_list(gammas_text));
    check_order_flag(data.n(), n, "gammas");
    const BranchClass branch = classify(data);
    const ClosedDisk disk = disk_nth(data);
    ojson j;
    j["center"] = complex_json(disk.center);
    j["radius"] = disk.radius;
    j["branch"] = branch.label();
    io.out << dump_json(j) << "\n";
    return 0;
}

int cmd_dieudonne(CommandIo io, const std::string& z0_text, const std::string& w0_text,
                  const std::string& gammas_text, const std::string& ws_text, bool has_gammas,
                  bool has_ws, int n) {
    if (has_gammas && has_ws)
        throw InvalidInput("bad_argument", "provide at most one of --gammas or --ws");
    const Complex z0 = parse_complex(z0_text);
    const Complex w0 = parse_complex(w0_text);
    const DieudonneData data =
        has_ws ? DieudonneData::from_ws(z0, w0, parse_complex_list(ws_text))
               : DieudonneData(z0, w0, parse_complex_list(gammas_text));
    check_order_flag(data.n(), n, "constraints plus one");
    const BranchClass branch = classify(data.hyperbolic());
    const ClosedDisk disk = dieudonne_disk(data);
    ojson j;
    j["center"] = complex_json(disk.center);
    j["radius"] = disk.radius;
    j["branch"] = branch.label();
    j["gammas"] = complex_list_json(data.gammas());
    j["ws"] = complex_list_json(w_from_gamma(data));
    io.out << dump_json(j) << "\n";
    return 0;
}

int cmd_extremal(CommandIo io, const std::string& z0_text, const std::string& gammas_text,
                 const std::string& epsilon_text, bool has_epsilon, double tail_theta,
                 bool has_tail_theta, const std::string& tail_zeros_text, int order_flag,
                 bool as_h) {
    const Complex z0 = parse_complex(z0_text);
    const std::vector<Complex> gammas = parse_complex_list(gammas_text);
    if (gammas.empty())
        throw InvalidInput("bad_argument", "--gammas must list gamma_0..gamma_{n-1}");
    if (has_epsilon && has_tail_theta)
        throw InvalidInput("bad_argument", "provide either --epsilon or a --tail-theta spec");

    ExtremalTail tail{Complex{0.0, 0.0}};
    if (has_epsilon)
        tail = ExtremalTail{parse_complex(epsilon_text)};
    else if (has_tail_theta)
        tail = ExtremalTail{BlaschkeProduct(tail_theta, parse_complex_list(tail_zeros_text))};

    const std::size_t n = gammas.size();
    const std::size_t order = order_flag >= 0 ? static_cast<std::size_t>(order_flag) : n + 2;

    TruncatedSeries series = [&]() {
        if (!as_h)
            return extremal_series(ExtremalSpec{HyperbolicData(z0, gammas), tail}, order);
        const Complex gamma0 = gammas.front();
        const DieudonneData data(z0, gamma0 * z0,
                                 std::vector<Complex>(gammas.begin() + 1, gammas.end()));
        return extremal_h_series(data, tail, order);
    }();
    io.out << dump_json(series_json(series)) << "\n";
    return 0;
}

int cmd_hyperbolic(CommandIo io, double theta, const std::string& zeros_text,
                   const std::string& z0_text, int n) {
    if (n < 1)
        throw InvalidInput("bad_argument", "--n must be >= 1");
    const BlaschkeProduct b(theta, parse_complex_list(zeros_text));
    const Complex z0 = parse_complex(z0_text);
    if (!(std::abs(z0) < 1.0))
        throw InvalidInput("modulus_out_of_range", "|z0| must be < 1");
    const TruncatedSeries f = blaschke_series(b, z0, static_cast<std::size_t>(n) + 2);
    const SchurParameters params = hyperbolic_derivatives(f, static_cast<std::size_t>(n));
    ojson j;
    j["gammas"] = complex_list_json(params.gammas);
    if (params.degenerate_at)
        j["degenerate_at"] = *params.degenerate_at;
    else
        j["degenerate_at"] = nullptr;
    io.out << dump_json(j) << "\n";
    return 0;
}

int cmd_verify(CommandIo io, std::uint64_t seed, int trials, int n_max) {
    if (const char* env = std::getenv("VARREGION_SEED")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw InvalidInput("bad_argument", "VARREGION_SEED is not an unsigned integer");
        seed = parsed;
    }
    if (trials < 1)
        throw InvalidInput("bad_argument", "--trials must be >= 1");
    if (n_max < 1)
        throw InvalidInput("bad_argument", "--n-max must be >= 1");

    TrialConfig config;
    config.seed = seed;
    config.trials = trials;
    config.n_max = n_max;
    const Report report = run_roundtrips(config);

    ojson j;
    for (const auto& [name, suite] : report.suites) {
        ojson entry;
        entry["pass"] = suite.pass;
        entry["worst_error"] = suite.worst_error;
        entry["trials"] = suite.trials;
        j[name] = entry;
    }
    io.out << dump_json(j) << "\n";
    return report.all_pass() ? 0 : 3;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandIo io{out, err};

    CLI::App app{"exact variability disks for n-th derivatives of bounded analytic self-maps"};
    app.require_subcommand(1);

    std::string z0_text, w0_text, gammas_text, ws_text, epsilon_text, zeros_text, tail_zeros_text;
    int n_flag = -1, order_flag = -1, trials = 1000, n_max = 5;
    double theta = 0.0, tail_theta = 0.0;
    std::uint64_t seed = 42;
    bool as_h = false;

    CLI::App* disk = app.add_subcommand("disk", "variability disk of f^(n)(z0)");
    disk->add_option("--z0", z0_text, "expansion point")->required();
    disk->add_option("--gammas", gammas_text, "gamma_0..gamma_{n-1}")->required();
    disk->add_option("--n", n_flag, "derivative order (defaults to the gamma count)");

    CLI::App* dieu = app.add_subcommand("dieudonne", "variability disk of h^(n)(z0), h(0)=0");
    dieu->add_option("--z0", z0_text, "constraint point")->required();
    dieu->add_option("--w0", w0_text, "prescribed h(z0)")->required();
    CLI::Option* gopt = dieu->add_option("--gammas", gammas_text, "gamma_1..gamma_{n-1}");
    CLI::Option* wopt = dieu->add_option("--ws", ws_text, "prescribed h'(z0)..h^(n-1)(z0)");
    dieu->add_option("--n", n_flag, "derivative order");

    CLI::App* extremal = app.add_subcommand("extremal", "series of the nested extremal function");
    extremal->add_option("--z0", z0_text, "expansion point")->required();
    extremal->add_option("--gammas", gammas_text, "gamma_0..gamma_{n-1}")->required();
    CLI::Option* eopt = extremal->add_option("--epsilon", epsilon_text, "constant tail");
    CLI::Option* topt = extremal->add_option("--tail-theta", tail_theta, "tail Blaschke rotation");
    extremal->add_option("--tail-zeros", tail_zeros_text, "tail Blaschke zeros");
    extremal->add_option("--order", order_flag, "truncation order (default n+2)");
    extremal->add_flag("--h-form", as_h, "emit h(z) = z f(z) instead of f");

    CLI::App* hyper = app.add_subcommand("hyperbolic", "hyperbolic derivatives of a Blaschke product");
    hyper->add_option("--theta", theta, "rotation angle in radians")->required();
    hyper->add_option("--zeros", zeros_text, "zero list (may be empty)");
    hyper->add_option("--z0", z0_text, "evaluation point")->required();
    hyper->add_option("--n", n_flag, "number of derivatives")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the randomized verification battery");
    verify->add_option("--seed", seed, "base seed (VARREGION_SEED overrides)");
    verify->add_option("--trials", trials, "trial count scale");
    verify->add_option("--n-max", n_max, "order bound");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("varreg");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (disk->parsed())
            return cmd_disk(io, z0_text, gammas_text, n_flag);
        if (dieu->parsed())
            return cmd_dieudonne(io, z0_text, w0_text, gammas_text, ws_text, gopt->count() > 0,
                                 wopt->count() > 0, n_flag);
        if (extremal->parsed())
            return cmd_extremal(io, z0_text, gammas_text, epsilon_text, eopt->count() > 0,
                                tail_theta, topt->count() > 0, tail_zeros_text, order_flag, as_h);
        if (hyper->parsed())
            return cmd_hyperbolic(io, theta, zeros_text, z0_text, n_flag);
        if (verify->parsed())
            return cmd_verify(io, seed, trials, n_max);
        throw InvalidInput("bad_argument", "no subcommand given");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return emit_error(io, "bad_argument", e.what(), 1);
    } catch (const InfeasibleError& e) {
        ojson extra;
        extra["index"] = e.index();
        extra["excess"] = e.excess();
        return emit_error(io, e.kind(), e.what(), 1, extra);
    } catch (const InvalidInput& e) {
        return emit_error(io, e.kind(), e.what(), 1);
    } catch (const NumericalError& e) {
        return emit_error(io, e.kind(), e.what(), 2);
    } catch (const std::exception& e) {
        return emit_error(io, "internal", e.what(), 2);
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace varreg
