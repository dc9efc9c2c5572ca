#include "hkmult/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hkmult/cli/input.hpp"
#include "hkmult/cli/report.hpp"
#include "hkmult/cli/svg.hpp"
#include "hkmult/cli/verify.hpp"
#include "hkmult/error.hpp"

namespace hkm::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string file;
    std::string family;
    unsigned prime = 0;
    unsigned maxN = 0;
    unsigned q = 0;
    std::optional<unsigned> period;
    std::optional<unsigned> maxOrder;
    std::optional<unsigned> qMark;
    std::string outPath;
    std::optional<long> r;
    std::vector<std::string> u;
    std::vector<std::string> v;
};

void addInputOptions(CLI::App* cmd, Options& opt) {
    cmd->add_option("--file", opt.file, "JSON input document");
    cmd->add_option("--family", opt.family, "veronese:r,m | a:r,m | quadrant:(a,b);(c,d);...");
}

InputDocument loadInput(const Options& opt) {
    if (!opt.file.empty() && !opt.family.empty())
        throw Error(Errc::BadInput, "give either --file or --family, not both");
    if (!opt.family.empty())
        return parseInputDocument(json{{"family", opt.family}});
    if (opt.file.empty())
        return parseInputDocument(json::object());
    std::ifstream in(opt.file);
    if (!in)
        throw Error(Errc::BadInput, "cannot open input file '" + opt.file + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(Errc::BadInput, std::string("malformed JSON in '") + opt.file + "': " + e.what());
    }
    return parseInputDocument(doc);
}

json eghkCommand(const ToricInstance& inst, std::ostream& err) {
    Rat value = egHK(inst.ideal);
    json res = {{"instance", instanceJson(inst)}, {"value", ratJson(value)},
                {"saturated", isSaturated(inst.ideal)}};
    if (inst.closedFormEgHK)
        res["closedForm"] = ratJson(*inst.closedFormEgHK);
    err << "egHK(" << describe(inst.label) << ") = " << toString(value) << " ~ " << toDecimal(value) << "\n";
    return res;
}

json functionCommand(const ToricInstance& inst, const Options& opt, std::ostream& err) {
    auto values = ghkFunction(inst.ideal, opt.prime, opt.maxN);
    json ratios = json::array();
    BigInt q = 1;
    err << "n  F(n)  F(n)/p^2n\n";
    for (size_t n = 0; n < values.size(); ++n, q *= opt.prime) {
        Rat ratio(values[n], q * q);
        ratios.push_back(ratJson(ratio));
        err << n << "  " << values[n] << "  " << toDecimal(ratio) << "\n";
    }
    return {{"prime", opt.prime},
            {"maxN", opt.maxN},
            {"values", countsJson(values)},
            {"ratios", ratios},
            {"eghk", ratJson(egHK(inst.ideal))},
            {"convergenceConstant", countJson(convergenceConstant(inst.ideal))}};
}

json splitCommand(const ToricInstance& inst, const Options& opt, std::ostream& err) {
    KeylemSplit k = keylemSplit(inst.ideal, opt.q);
    err << "q=" << opt.q << ": total " << k.totalGap << " = sym/ord " << k.symVsOrd << " + ord/frob "
        << k.ordVsFrob << "\n";
    return {{"q", opt.q},
            {"totalGap", countJson(k.totalGap)},
            {"symVsOrd", countJson(k.symVsOrd)},
            {"ordVsFrob", countJson(k.ordVsFrob)},
            {"additive", k.totalGap == k.symVsOrd + k.ordVsFrob}};
}

json powersCommand(const ToricInstance& inst, const Options& opt, std::ostream& err) {
    auto values = h0Powers(inst.ideal, opt.maxN);
    json res = {{"maxN", opt.maxN}, {"values", countsJson(values)}};
    err << "l(H^0(R/I^n)), n=1.." << opt.maxN << ":";
    for (const BigInt& v : values) err << ' ' << v;
    err << "\n";
    if (opt.maxN >= 10) {
        Rat eps = epsilonEstimate(inst.ideal, opt.maxN);
        res["epsilonEstimate"] = ratJson(eps);
        err << "epsilon estimate " << toString(eps) << " ~ " << toDecimal(eps) << "\n";
    }
    if (opt.period) {
        QuasiPolynomial qp = quasiPolyFit(values, *opt.period);
        res["quasiPolynomial"] = quasiPolynomialJson(qp);
        err << "quasi-polynomial period " << qp.period << ", leading " << toString(qp.leading()) << ", onset n="
            << qp.onsetIndex << "\n";
    }
    res["torsion"] = nullptr;
    if (isSaturated(inst.ideal)) {
        const BigInt& d = inst.cone.detAbs();
        unsigned maxOrder = opt.maxOrder.value_or(d > 10000 ? 10000u : d.convert_to<unsigned>());
        if (auto tf = torsionFactorization(inst.ideal, maxOrder)) {
            json cofactor = json::array();
            for (const LatticePoint& g : tf->cofactor.generators()) cofactor.push_back(pointJson(g));
            BigInt e = newtonMultiplicity(tf->cofactor);
            Rat predicted(e, BigInt(2 * tf->order * tf->order));
            res["torsion"] = {{"order", tf->order},
                              {"principalPart", pointJson(tf->principalPart)},
                              {"cofactorGenerators", cofactor},
                              {"newtonMultiplicity", countJson(e)},
                              {"predictedLeading", ratJson(predicted)}};
            err << "torsion order " << tf->order << ", e(J) = " << e << ", e(J)/2r^2 = " << toString(predicted)
                << "\n";
        }
    }
    return res;
}

json reptypeCommand(const InputDocument& doc, const Options& opt, std::ostream& err) {
    RepTypeInput in;
    if (doc.reptype) {
        in = *doc.reptype;
    } else {
        if (!opt.r)
            throw Error(Errc::BadInput, "reptype needs --r/--u or a file with a 'reptype' section");
        in.r = *opt.r;
        for (const std::string& x : opt.u) in.u.u.push_back(parseBigInt(x));
        if (!opt.v.empty()) {
            SplittingVector v;
            for (const std::string& x : opt.v) v.v.push_back(parseRat(x));
            in.v = std::move(v);
        }
    }
    Rat value = evaluateRepType(in);
    err << "egHK from stable CM type = " << toString(value) << " ~ " << toDecimal(value) << "\n";
    return {{"value", ratJson(value)}, {"dimension", in.u.u.size()}};
}

json verifyCommand(const ToricInstance& inst, bool& allPassed, std::ostream& err) {
    json checks = json::array();
    allPassed = true;
    for (const CheckResult& c : verifyInstance(inst)) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        allPassed = allPassed && c.passed;
        err << (c.passed ? "PASS " : "FAIL ") << c.name << (c.passed ? "" : ": " + c.detail) << "\n";
    }
    return {{"checks", checks}, {"allPassed", allPassed}};
}

json plotCommand(const ToricInstance& inst, const Options& opt, std::ostream& err) {
    std::string svg = renderRegionSvg(inst, opt.qMark);
    std::ofstream file(opt.outPath, std::ios::binary);
    if (!file)
        throw Error(Errc::BadInput, "cannot write '" + opt.outPath + "'");
    file << svg;
    err << "wrote " << svg.size() << " bytes to " << opt.outPath << "\n";
    json res = {{"file", opt.outPath}, {"bytes", svg.size()}};
    if (opt.qMark)
        res["qMark"] = *opt.qMark;
    return res;
}

} // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Hilbert-Kunz invariants of monomial ideals in 2-dimensional toric rings"};
    app.name("hkcalc");
    app.require_subcommand(1);
    Options opt;

    auto* eghk = app.add_subcommand("eghk", "exact generalized Hilbert-Kunz multiplicity");
    addInputOptions(eghk, opt);

    auto* function = app.add_subcommand("function", "F(n) = l(H^0(R/I^[p^n])) and F(n)/p^2n");
    addInputOptions(function, opt);
    function->add_option("--prime", opt.prime, "characteristic p")->required();
    function->add_option("--max-n", opt.maxN, "largest n")->required();

    auto* split = app.add_subcommand("split", "length decomposition at exponent q");
    addInputOptions(split, opt);
    split->add_option("--q", opt.q, "exponent q")->required()->check(CLI::PositiveNumber);

    auto* powers = app.add_subcommand("powers", "l(H^0(R/I^n)), quasi-polynomial fit, torsion data");
    addInputOptions(powers, opt);
    powers->add_option("--max-n", opt.maxN, "largest n")->required()->check(CLI::PositiveNumber);
    powers->add_option("--period", opt.period, "fit a quasi-polynomial of this period")->check(CLI::PositiveNumber);
    powers->add_option("--max-order", opt.maxOrder, "largest torsion order to try")->check(CLI::PositiveNumber);

    auto* reptype = app.add_subcommand("reptype", "egHK from a stable Cohen-Macaulay type");
    reptype->add_option("--file", opt.file, "JSON input document with a 'reptype' section");
    reptype->add_option("--r", opt.r, "A_{r-1} singularity");
    reptype->add_option("--u", opt.u, "stable CM type, comma separated")->delimiter(',');
    reptype->add_option("--v", opt.v, "splitting vector, comma separated rationals")->delimiter(',');

    auto* verify = app.add_subcommand("verify", "run the invariant checks on the input");
    addInputOptions(verify, opt);

    auto* plot = app.add_subcommand("plot", "SVG picture of W_I and LC_I minus W_I");
    addInputOptions(plot, opt);
    plot->add_option("--out", opt.outPath, "output SVG file")->required();
    plot->add_option("--q-mark", opt.qMark, "split the gap at exponent q")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    try {
        InputDocument doc = loadInput(opt);
        json report = {{"input", doc.echo}, {"command", name}};
        int status = 0;
        if (name == "reptype") {
            report["results"][name] = reptypeCommand(doc, opt, err);
        } else {
            ToricInstance inst = resolveToric(doc);
            if (name == "eghk")
                report["results"][name] = eghkCommand(inst, err);
            else if (name == "function")
                report["results"][name] = functionCommand(inst, opt, err);
            else if (name == "split")
                report["results"][name] = splitCommand(inst, opt, err);
            else if (name == "powers")
                report["results"][name] = powersCommand(inst, opt, err);
            else if (name == "plot")
                report["results"][name] = plotCommand(inst, opt, err);
            else if (name == "verify") {
                bool allPassed = false;
                report["results"][name] = verifyCommand(inst, allPassed, err);
                status = allPassed ? 0 : 2;
            }
        }
        out << report.dump(2) << "\n";
        return status;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return isContractViolation(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace hkm::cli
