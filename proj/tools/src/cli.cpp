#include "fixmahon/cli.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixmahon/enumeration.hpp"
#include "fixmahon/error.hpp"
#include "fixmahon/f3.hpp"
#include "fixmahon/phi.hpp"
#include "fixmahon/qseries.hpp"
#include "fixmahon/text.hpp"
#include "fixmahon/verify.hpp"
#include "fixmahon/zder.hpp"

namespace fixmahon::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<std::string> word;
    std::optional<std::string> perm;
    std::string format = "text";
    std::optional<std::size_t> n;
    std::optional<std::size_t> n_min;
    std::optional<std::size_t> max_n;
    std::string stats = "fix,des,maj";
    std::string claim;
    std::size_t u = 6;
    std::size_t t = 6;
    unsigned jobs = 1;
    Letter max_letter = 3;
    bool trace = false;
};

std::optional<std::size_t> cap_from_env() {
    const char* raw = std::getenv("FIXMAHON_MAX_N");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (*end != '\0' || raw[0] == '-') {
        throw UsageError(std::string("FIXMAHON_MAX_N: invalid value '") + raw + "'");
    }
    return static_cast<std::size_t>(v);
}

json word_stats_json(const Word& w) {
    json j;
    j["Zero"] = format_index_set(zero_set(w));
    j["Pos"] = format_word(pos_subword(w));
    j["DES"] = format_index_set(des_set(w));
    j["RISE"] = format_index_set(rise_set(w));
    try {
        j["RISE•"] = format_index_set(rise_bullet_set(w));
    } catch (const Error&) {
        j["RISE•"] = nullptr;  // a neutral letter leaves RISE• undefined
    }
    j["maj"] = maj(w);
    j["mafz"] = mafz(w);
    return j;
}

json perm_stats_json(const Permutation& p) {
    const StatVector s = perm_stats(p);
    json j;
    j["fix"] = s.fix;
    j["des"] = s.des;
    j["exc"] = s.exc;
    j["maj"] = s.maj;
    j["dez"] = s.dez;
    j["maz"] = s.maz;
    j["maf"] = s.maf;
    j["FIX"] = format_index_set(s.FIX);
    j["DES"] = format_index_set(s.DES);
    j["DEZ"] = format_index_set(s.DEZ);
    j["RISE"] = format_index_set(s.RISE);
    j["RIZE"] = format_index_set(s.RIZE);
    j["ZDer"] = format_word(zder(p));
    j["Der"] = format_word(der(p));
    return j;
}

void print_stats_text(std::ostream& out, const json& stats) {
    for (const auto& [key, value] : stats.items()) {
        out << key << '=';
        if (value.is_null()) {
            out << "undefined";
        } else if (value.is_string()) {
            out << value.get<std::string>();
        } else {
            out << value.dump();
        }
        out << '\n';
    }
}

void emit(std::ostream& out, const Options& o, const std::string& operation, const json& input,
          const json& result, const json& stats, const std::string& text) {
    if (o.format == "json") {
        json j;
        j["input"] = input;
        j["operation"] = operation;
        j["result"] = result;
        j["stats"] = stats;
        out << j.dump() << '\n';
    } else {
        out << text;
    }
}

void require_text_or_json(const Options& o, const std::string& command) {
    if (o.format == "csv") throw UsageError(command + ": --format csv is only supported by table");
}

// Exactly one of --word / --perm, as allowed by the command.
enum class Payload { Word, Perm };

Payload payload_kind(const Options& o, const std::string& command, bool word_ok, bool perm_ok) {
    if (o.word && o.perm) throw UsageError(command + ": give either --word or --perm, not both");
    if (o.word && word_ok) return Payload::Word;
    if (o.perm && perm_ok) return Payload::Perm;
    std::string expected = word_ok && perm_ok ? "--word or --perm" : word_ok ? "--word" : "--perm";
    throw UsageError(command + ": expected " + expected);
}

int cmd_stats(std::ostream& out, const Options& o) {
    require_text_or_json(o, "stats");
    if (payload_kind(o, "stats", true, true) == Payload::Word) {
        const Word w = parse_word(*o.word);
        const json stats = word_stats_json(w);
        std::ostringstream text;
        print_stats_text(text, stats);
        emit(out, o, "stats", format_word(w), format_word(w), stats, text.str());
    } else {
        const Permutation p = parse_permutation(*o.perm);
        const json stats = perm_stats_json(p);
        std::ostringstream text;
        print_stats_text(text, stats);
        emit(out, o, "stats", format_permutation(p), format_permutation(p), stats, text.str());
    }
    return kOk;
}

std::string phi_case_name(PhiCase c) {
    switch (c) {
        case PhiCase::Identity: return "identity";
        case PhiCase::Case1: return "case 1";
        case PhiCase::Case2: return "case 2";
        case PhiCase::Case3: return "case 3";
    }
    return "?";
}

std::string f3_case_name(F3Case c) {
    switch (c) {
        case F3Case::Base: return "base";
        case F3Case::Case1: return "case 1";
        case F3Case::Case2: return "case 2";
        case F3Case::Case3: return "case 3";
    }
    return "?";
}

std::string trace_text(const std::string& op, const Word& w) {
    std::ostringstream os;
    if (op == "phi") {
        for (const auto& s : phi_trace(w)) {
            os << "phi_" << s.l << ": " << format_word(s.result) << " (" << phi_case_name(s.kind)
               << ", j=" << s.zero_position;
            if (s.chain_end) os << (s.kind == PhiCase::Case2 ? ", k=" : ", i=") << s.chain_end;
            os << ")\n";
        }
    } else if (op == "f3") {
        for (const auto& s : f3_trace(w)) {
            os << "F3[1.." << s.length << "]: " << format_word(s.image) << " ("
               << f3_case_name(s.kind) << ")\n";
        }
    }
    return os.str();
}

int cmd_transform(std::ostream& out, const Options& o, const std::string& op) {
    require_text_or_json(o, op);
    if (o.trace && op != "phi" && op != "f3") throw UsageError(op + ": --trace is supported by phi and f3");
    if (payload_kind(o, op, true, true) == Payload::Word) {
        const Word w = parse_word(*o.word);
        Word r;
        if (op == "phi") r = phi(w);
        else if (op == "psi") r = psi(w);
        else if (op == "f3") r = f3(w);
        else r = f3_inv(w);
        std::string text = o.trace ? trace_text(op, w) : "";
        text += format_word(r) + '\n';
        emit(out, o, op, format_word(w), format_word(r), word_stats_json(r), text);
    } else {
        if (o.trace) throw UsageError(op + ": --trace needs --word");
        const Permutation p = parse_permutation(*o.perm);
        Permutation r;
        if (op == "phi") r = phi_perm(p);
        else if (op == "psi") r = phi_inv_perm(p);
        else if (op == "f3") r = f3_perm(p);
        else r = f3_inv_perm(p);
        emit(out, o, op, format_permutation(p), format_permutation(r), perm_stats_json(r),
             format_permutation(r) + '\n');
    }
    return kOk;
}

int cmd_zder(std::ostream& out, const Options& o) {
    require_text_or_json(o, "zder");
    payload_kind(o, "zder", false, true);
    const Permutation p = parse_permutation(*o.perm);
    const Word w = zder(p);
    emit(out, o, "zder", format_permutation(p), format_word(w), word_stats_json(w),
         format_word(w) + '\n');
    return kOk;
}

int cmd_zder_inv(std::ostream& out, const Options& o) {
    require_text_or_json(o, "zder-inv");
    payload_kind(o, "zder-inv", true, false);
    const Word w = parse_word(*o.word);
    const Permutation p = zder_inv(w);
    emit(out, o, "zder-inv", format_word(w), format_permutation(p), perm_stats_json(p),
         format_permutation(p) + '\n');
    return kOk;
}

int cmd_table(std::ostream& out, const Options& o, std::size_t cap) {
    if (!o.n) throw UsageError("table: --n is required");
    const auto stats = parse_stat_list(o.stats);
    const DistributionTable table = joint_distribution(*o.n, stats, cap);
    if (o.format == "csv") {
        out << table.to_csv();
    } else if (o.format == "json") {
        json input;
        input["n"] = *o.n;
        input["stats"] = json::parse(table.to_json())["stats"];
        json st;
        st["total"] = table.total();
        st["rows"] = table.counts.size();
        emit(out, o, "table", input, json::parse(table.to_json()), st, "");
    } else {
        out << table.to_text();
    }
    return kOk;
}

int cmd_verify(std::ostream& out, const Options& o, std::size_t cap,
               std::size_t series_cap) {
    require_text_or_json(o, "verify");
    if (o.claim.empty()) throw UsageError("verify: --claim is required");
    VerificationReport report;
    if (o.claim == "id-1.27") {
        report = verify_identity_127(o.max_n.value_or(o.n.value_or(8)), series_cap);
    } else if (o.claim == "id-1.26") {
        report = verify_identity_126(o.u, o.t, series_cap);
    } else {
        VerifyOptions vo;
        vo.n_max = o.n.value_or(o.max_n.value_or(vo.n_max));
        vo.n_min = o.n_min.value_or(0);
        if (vo.n_min > vo.n_max) throw UsageError("verify: --n-min exceeds --n");
        vo.jobs = o.jobs == 0 ? 1 : o.jobs;
        vo.cap = cap;
        vo.max_letter = o.max_letter;
        report = verify_claim(o.claim, vo);
    }
    if (o.format == "json") {
        json input;
        input["claim"] = report.claim;
        input["range"] = report.range;
        json st;
        st["checked"] = report.checked;
        emit(out, o, "verify", input, json::parse(report.to_json()), st, "");
    } else {
        out << report.to_text();
    }
    return report.pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero-moving bijections on shuffle classes and fix-Mahonian statistics",
                 "fixmahon"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Options o;
    const auto add_payload = [&](CLI::App* sub, bool word, bool perm) {
        if (word) sub->add_option("--word", o.word, "Word, letters separated by spaces");
        if (perm) sub->add_option("--perm", o.perm, "Permutation in one-line notation");
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* stats = app.add_subcommand("stats", "Statistics of a word or permutation");
    add_payload(stats, true, true);
    std::map<std::string, CLI::App*> transforms;
    for (const auto& [name, help] :
         std::vector<std::pair<std::string, std::string>>{{"phi", "Apply Phi"},
                                                          {"psi", "Apply Psi = Phi^-1"},
                                                          {"f3", "Apply F3"},
                                                          {"f3-inv", "Apply F3^-1"}}) {
        auto* sub = app.add_subcommand(name, help);
        add_payload(sub, true, true);
        if (name == "phi" || name == "f3") {
            sub->add_flag("--trace", o.trace, "Print the intermediate words");
        }
        transforms[name] = sub;
    }
    auto* zder_cmd = app.add_subcommand("zder", "Encode a permutation as a word");
    add_payload(zder_cmd, false, true);
    auto* zder_inv_cmd = app.add_subcommand("zder-inv", "Decode a word to a permutation");
    add_payload(zder_inv_cmd, true, false);

    auto* table = app.add_subcommand("table", "Joint distribution of statistics over S_n");
    add_payload(table, false, false);
    table->add_option("--n", o.n, "Permutation length");
    table->add_option("--stats", o.stats, "Comma separated statistics")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Exhaustively verify a claim");
    add_payload(verify, false, false);
    verify->add_option("--claim", o.claim,
                       "thm-1.1, thm-1.2, prop-1.3, thm-1.4, cor-1.5, prop-4.1, roundtrips, "
                       "id-1.27, id-1.26");
    verify->add_option("--n", o.n, "Largest n");
    verify->add_option("--n-min", o.n_min, "Smallest n");
    verify->add_option("--max-n", o.max_n, "Largest n for id-1.27");
    verify->add_option("--u", o.u, "u-degree cap for id-1.26")->capture_default_str();
    verify->add_option("--t", o.t, "t-degree cap for id-1.26")->capture_default_str();
    verify->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
    verify->add_option("--max-letter", o.max_letter, "Alphabet bound for arbitrary words")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const auto env_cap = cap_from_env();
        const std::size_t cap = env_cap.value_or(kDefaultMaxN);
        const std::size_t series_cap = env_cap.value_or(kDefaultSeriesCap);
        if (stats->parsed()) return cmd_stats(out, o);
        for (const auto& [name, sub] : transforms) {
            if (sub->parsed()) return cmd_transform(out, o, name);
        }
        if (zder_cmd->parsed()) return cmd_zder(out, o);
        if (zder_inv_cmd->parsed()) return cmd_zder_inv(out, o);
        if (table->parsed()) return cmd_table(out, o, cap);
        if (verify->parsed()) return cmd_verify(out, o, cap, series_cap);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace fixmahon::cli
