#include "tfn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tfn/aggregate.hpp"
#include "tfn/core.hpp"
#include "tfn/io.hpp"
#include "tfn/order.hpp"

namespace fuzzy::cli {

namespace {

using io::Dataset;
using io::Format;
using io::Precision;
using io::TfnRecord;

/// Usage or data problem that ends the run with kExitUsage.
struct UsageError {
    std::string message;
};

struct CommonOptions {
    std::string input = "-";
    std::string format;
    bool exact = false;
};

struct Context {
    std::istream& in;
    std::ostream& out;
};

std::string display_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

Dataset load(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return io::parse_input(in);
        std::ifstream file(path);
        if (!file) throw UsageError{"cannot open '" + path + "'"};
        return io::parse_input(file);
    } catch (const ParseError& e) {
        throw UsageError{display_name(path) + ":" + std::to_string(e.line()) + ": " + e.what()};
    } catch (const io::RecordError& e) {
        throw UsageError{display_name(path) + ":" + std::to_string(e.line()) + ": " + e.what()};
    }
}

Format output_format(const CommonOptions& o, const Dataset& d) {
    if (o.format.empty()) return d.format;
    return *io::parse_format(o.format);
}

Precision precision(const CommonOptions& o) { return o.exact ? Precision::exact : Precision::rounded; }

std::vector<Tfn> values_of(const Dataset& d) {
    std::vector<Tfn> xs;
    xs.reserve(d.records.size());
    for (const auto& r : d.records) xs.push_back(r.value);
    return xs;
}

std::string record_prefix(const TfnRecord& r, Format f) {
    if (!r.id) return f == Format::csv ? "" : "{";
    return f == Format::csv ? *r.id + "," : "{\"id\":" + io::json_quote(*r.id) + ",";
}

void add_common(CLI::App* sub, CommonOptions& o) {
    sub->add_option("input", o.input, "input file ('-' for stdin)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--exact", o.exact, "print 17 significant digits");
}

// aggregate ---------------------------------------------------------------

struct AggregateOptions {
    CommonOptions common;
    std::string method;
    std::vector<double> weights;
    bool check = false;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
};

Aggregator build_aggregator(const AggregateOptions& o, std::size_t n) {
    if (o.method == "wmean") {
        if (o.weights.empty()) throw UsageError{"--method wmean requires --weights"};
        if (o.weights.size() != n) {
            throw UsageError{"got " + std::to_string(o.weights.size()) + " weights for " + std::to_string(n) +
                             " records"};
        }
        return make_weighted_mean(WeightVector(o.weights));
    }
    if (!o.weights.empty()) throw UsageError{"--weights is only valid with --method wmean"};
    if (o.method == "mean") return make_arithmetic_mean(n);
    if (o.method == "min") return make_ot_min(n);
    return make_ot_max(n);
}

void print_check(std::ostream& out, Format f, const char* name, bool holds, std::optional<std::size_t> trials,
                 std::uint64_t seed) {
    if (f == Format::json) {
        out << "{\"check\":\"" << name << "\",\"holds\":" << (holds ? "true" : "false");
        if (trials) out << ",\"trials\":" << *trials << ",\"seed\":" << seed;
        out << "}\n";
        return;
    }
    out << name << ": " << (holds ? "holds" : "fails");
    if (trials) out << " (" << *trials << " trials, seed " << seed << ")";
    out << '\n';
}

int cmd_aggregate(const AggregateOptions& o, Context& ctx) {
    const Dataset d = load(o.common.input, ctx.in);
    if (d.records.empty()) throw UsageError{"no records to aggregate"};
    const Format f = output_format(o.common, d);
    const Precision p = precision(o.common);

    const Aggregator E = build_aggregator(o, d.records.size());
    const TfnVector U(values_of(d));
    const Tfn result = E(U);

    if (f == Format::csv) {
        ctx.out << io::format_triple(result, p) << '\n';
    } else {
        ctx.out << io::format_record(TfnRecord{std::nullopt, result, 0}, f, p) << '\n';
    }

    if (o.check) {
        const auto inc = is_ot_increasing_witness(E, o.trials, o.seed);
        const auto idem = is_idempotent_witness(E, o.trials, o.seed, 1e-12);
        print_check(ctx.out, f, "ot_increasing", inc.holds, inc.trials_run, o.seed);
        print_check(ctx.out, f, "idempotent", idem.holds, idem.trials_run, o.seed);
        print_check(ctx.out, f, "fta_bounds", fta_bounds_check(E, U), std::nullopt, o.seed);
    }
    return kExitOk;
}

// sort / classify / cut ---------------------------------------------------

int cmd_sort(const CommonOptions& o, Context& ctx) {
    Dataset d = load(o.input, ctx.in);
    std::stable_sort(d.records.begin(), d.records.end(),
                     [](const TfnRecord& x, const TfnRecord& y) { return less_ot(x.value, y.value); });
    const Format f = output_format(o, d);
    for (const auto& r : d.records) ctx.out << io::format_record(r, f, precision(o)) << '\n';
    return kExitOk;
}

int cmd_classify(const CommonOptions& o, Context& ctx) {
    const Dataset d = load(o.input, ctx.in);
    const Format f = output_format(o, d);
    for (const auto& r : d.records) {
        const auto sign = to_string(classify_sign(r.value));
        if (f == Format::csv) {
            ctx.out << record_prefix(r, f) << sign << '\n';
        } else {
            ctx.out << record_prefix(r, f) << "\"sign\":\"" << sign << "\"}\n";
        }
    }
    return kExitOk;
}

int cmd_cut(const CommonOptions& o, double alpha, Context& ctx) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in ]0, 1]");
    const Dataset d = load(o.input, ctx.in);
    const Format f = output_format(o, d);
    const Precision p = precision(o);
    for (const auto& r : d.records) {
        const Interval I = alpha_cut(r.value, alpha);
        if (f == Format::csv) {
            ctx.out << record_prefix(r, f) << io::format_interval(I, p) << '\n';
        } else {
            ctx.out << record_prefix(r, f) << "\"alpha\":" << io::format_number(alpha, p)
                    << ",\"lo\":" << io::format_number(I.lo, p) << ",\"hi\":" << io::format_number(I.hi, p)
                    << "}\n";
        }
    }
    return kExitOk;
}

// arith -------------------------------------------------------------------

struct ArithOptions {
    CommonOptions common;
    std::string op;
    std::string rhs;
    std::optional<double> scalar;
};

std::string where(const TfnRecord& r) { return "record at line " + std::to_string(r.line); }

Tfn apply(const std::string& op, const TfnRecord& lhs, const Tfn& B, bool rhs_is_scalar) {
    const Tfn& A = lhs.value;
    if (op == "add") return A + B;
    if (op == "sub") return A - B;
    if (op == "mul") {
        if (B.is_crisp()) return A * Crisp(B.b());
        if (A.is_crisp()) return Crisp(A.b()) * B;
        throw UsageError{where(lhs) + ": product of two non-crisp TFNs is not triangular"};
    }
    // div
    if (!B.is_crisp()) throw UsageError{where(lhs) + ": divisor must be crisp"};
    try {
        return A / Crisp(B.b());
    } catch (const DivisionByZero&) {
        throw UsageError{rhs_is_scalar ? std::string("division by the crisp zero")
                                       : where(lhs) + ": division by the crisp zero"};
    }
}

int cmd_arith(const ArithOptions& o, Context& ctx) {
    const bool has_rhs = !o.rhs.empty();
    if (o.op == "neg") {
        if (has_rhs || o.scalar) throw UsageError{"--op neg takes no second operand"};
    } else if (has_rhs == o.scalar.has_value()) {
        throw UsageError{"--op " + o.op + " needs exactly one of --rhs or --scalar"};
    }
    if (has_rhs && o.rhs == "-" && o.common.input == "-") {
        throw UsageError{"only one operand can be read from stdin"};
    }

    const Dataset lhs = load(o.common.input, ctx.in);
    std::optional<Dataset> rhs;
    if (has_rhs) {
        rhs = load(o.rhs, ctx.in);
        const auto n = rhs->records.size();
        if (n != 1 && n != lhs.records.size()) {
            throw UsageError{"--rhs has " + std::to_string(n) + " records, input has " +
                             std::to_string(lhs.records.size())};
        }
    }

    const Format f = output_format(o.common, lhs);
    const Precision p = precision(o.common);
    std::vector<TfnRecord> results;
    results.reserve(lhs.records.size());
    for (std::size_t i = 0; i < lhs.records.size(); ++i) {
        const TfnRecord& r = lhs.records[i];
        Tfn value;
        if (o.op == "neg") {
            value = -r.value;
        } else if (rhs) {
            const Tfn& B = rhs->records.size() == 1 ? rhs->records[0].value : rhs->records[i].value;
            value = apply(o.op, r, B, false);
        } else {
            value = apply(o.op, r, Tfn(Crisp(*o.scalar)), true);
        }
        results.push_back(TfnRecord{r.id, value, r.line});
    }
    for (const auto& r : results) ctx.out << io::format_record(r, f, p) << '\n';
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Triangular fuzzy number arithmetic, ordering and aggregation", "tfn"};
    app.require_subcommand(1);

    AggregateOptions agg;
    auto* aggregate = app.add_subcommand("aggregate", "aggregate all records into one TFN");
    add_common(aggregate, agg.common);
    aggregate->add_option("--method", agg.method, "aggregation function")
        ->required()
        ->check(CLI::IsMember({"mean", "wmean", "min", "max"}));
    aggregate->add_option("--weights", agg.weights, "comma-separated weights for wmean")->delimiter(',')->allow_extra_args(false);
    aggregate->add_flag("--check", agg.check, "run the averaging-function witnesses on the aggregator");
    aggregate->add_option("--trials", agg.trials, "witness trials")->check(CLI::PositiveNumber);
    aggregate->add_option("--seed", agg.seed, "witness seed");

    CommonOptions sort_opts;
    auto* sort = app.add_subcommand("sort", "sort records ascending under the OT order");
    add_common(sort, sort_opts);

    CommonOptions classify_opts;
    auto* classify = app.add_subcommand("classify", "print the OT sign of every record");
    add_common(classify, classify_opts);

    CommonOptions cut_opts;
    double alpha = 0.0;
    auto* cut = app.add_subcommand("cut", "print the alpha-cut of every record");
    add_common(cut, cut_opts);
    cut->add_option("--alpha", alpha, "level in ]0, 1]")->required();

    ArithOptions ar;
    auto* arith = app.add_subcommand("arith", "closed-form arithmetic against a second file or a crisp scalar");
    add_common(arith, ar.common);
    arith->add_option("--op", ar.op, "operation")
        ->required()
        ->check(CLI::IsMember({"add", "sub", "mul", "div", "neg"}));
    arith->add_option("--rhs", ar.rhs, "second operand file (one record, or one per input record)");
    arith->add_option("--scalar", ar.scalar, "crisp second operand");

    std::vector<std::string> argv_storage{"tfn"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Context ctx{in, out};
    try {
        if (*aggregate) return cmd_aggregate(agg, ctx);
        if (*sort) return cmd_sort(sort_opts, ctx);
        if (*classify) return cmd_classify(classify_opts, ctx);
        if (*cut) return cmd_cut(cut_opts, alpha, ctx);
        return cmd_arith(ar, ctx);
    } catch (const UsageError& e) {
        err << "error: " << e.message << '\n';
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DivisionByZero& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace fuzzy::cli
