// Copyright 2026 The retromaser Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "retromaser/retromaser.h"

namespace retromaser::cli {

namespace {

using json = nlohmann::ordered_json;

template <class T, void (*Destroy)(T)> struct HandleDeleter {
    void operator()(T handle) const { Destroy(handle); }
};

using Params = std::unique_ptr<rm_params_s, HandleDeleter<rm_params_t, rm_params_destroy>>;
using Sequence = std::unique_ptr<rm_sequence_s, HandleDeleter<rm_sequence_t, rm_sequence_destroy>>;
using Prior = std::unique_ptr<rm_prior_s, HandleDeleter<rm_prior_t, rm_prior_destroy>>;
using Weights = std::unique_ptr<rm_weights_s, HandleDeleter<rm_weights_t, rm_weights_destroy>>;
using State = std::unique_ptr<rm_state_s, HandleDeleter<rm_state_t, rm_state_destroy>>;
using Report = std::unique_ptr<rm_report_s, HandleDeleter<rm_report_t, rm_report_destroy>>;

/// A failed library call or bad input, carrying the exit status to use.
struct CommandError : std::runtime_error {
    CommandError(int exit_code, const std::string &message)
        : std::runtime_error(message), exit_code(exit_code) {}
    int exit_code;
};

void check(rm_status status) {
    if (status == RM_OK) {
        return;
    }
    const int code = status == RM_ERR_EMPTY_SUPPORT ? kImpossibleEvent : kUsageError;
    throw CommandError(code, rm_last_error());
}

struct RunConfig {
    std::string command;
    std::string sequence;
    std::string theta_text = "pi";
    std::size_t n_max = 25;
    std::string prior_text = "uniform";
    std::string format = "csv";
    std::string output;
    std::string figure_id;
};

double parse_theta(const std::string &text) {
    if (text == "pi") {
        return std::numbers::pi;
    }
    double value = 0.0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw CommandError(kUsageError, "invalid --theta '" + text +
                                            "': expected a number or 'pi'");
    }
    return value;
}

Params make_params(double theta, std::size_t n_max) {
    rm_params_t raw = nullptr;
    check(rm_params_create(theta, n_max, 0.0, &raw));
    return Params(raw);
}

Sequence make_sequence(const std::string &text) {
    rm_sequence_t raw = nullptr;
    check(rm_sequence_parse(text.c_str(), &raw));
    return Sequence(raw);
}

/// Reads `n,value` rows (the tool's own CSV output works); '#' lines and an
/// `n,value` header are skipped, unlisted photon numbers get weight 0.
Weights read_prior_file(const std::string &path, std::size_t n_max) {
    std::ifstream in(path);
    if (!in) {
        throw CommandError(kUsageError, "cannot open prior file '" + path + "'");
    }
    std::vector<double> weights(n_max + 1, 0.0);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#' || line == "n,value") continue;
        const auto comma = line.find(',');
        std::size_t n = 0;
        double value = 0.0;
        bool ok = comma != std::string::npos;
        if (ok) {
            const char *b = line.data();
            auto r1 = std::from_chars(b, b + comma, n);
            auto r2 = std::from_chars(b + comma + 1, b + line.size(), value);
            ok = r1.ec == std::errc() && r1.ptr == b + comma &&
                 r2.ec == std::errc() && r2.ptr == b + line.size();
        }
        if (!ok) {
            throw CommandError(kUsageError, path + ":" + std::to_string(line_no) +
                                                ": expected 'n,value'");
        }
        if (n > n_max) {
            throw CommandError(kUsageError, path + ":" + std::to_string(line_no) +
                                                ": photon number " + std::to_string(n) +
                                                " exceeds n_max " + std::to_string(n_max));
        }
        weights[n] = value;
    }
    rm_weights_t raw = nullptr;
    check(rm_weights_create(weights.data(), weights.size(), &raw));
    return Weights(raw);
}

Prior make_prior(const std::string &text, std::size_t n_max) {
    rm_prior_t raw = nullptr;
    if (text == "uniform") {
        check(rm_prior_uniform(&raw));
    } else if (text.rfind("cap:", 0) == 0) {
        std::size_t cap = 0;
        const char *b = text.data() + 4;
        const char *e = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(b, e, cap);
        if (ec != std::errc() || ptr != e || b == e) {
            throw CommandError(kUsageError, "invalid prior '" + text + "': expected cap:K");
        }
        if (cap > n_max) {
            throw CommandError(kUsageError, "prior cap " + std::to_string(cap) +
                                                " exceeds n_max " + std::to_string(n_max));
        }
        check(rm_prior_cap(cap, &raw));
    } else {
        const Weights weights = read_prior_file(text, n_max);
        check(rm_prior_explicit(weights.get(), &raw));
    }
    return Prior(raw);
}

std::vector<double> copy_weights(rm_weights_t w) {
    const double *data = rm_weights_data(w);
    return std::vector<double>(data, data + rm_weights_size(w));
}

struct Table {
    double theta;
    std::size_t n_max;
    std::string sequence;
    std::string prior;
    std::vector<double> values;
    /// Extra key/values: CSV trailing comments, JSON object members.
    json extra = json::object();
    std::vector<std::string> comments;
};

Table make_table(double theta, std::size_t n_max, std::string sequence,
                 std::string prior, std::vector<double> values) {
    Table t;
    t.theta = theta;
    t.n_max = n_max;
    t.sequence = std::move(sequence);
    t.prior = std::move(prior);
    t.values = std::move(values);
    return t;
}

void write_table(const Table &t, const std::string &format, std::ostream &out) {
    if (format == "json") {
        json doc;
        doc["params"] = {{"theta", t.theta}, {"n_max", t.n_max}};
        doc["sequence"] = t.sequence;
        doc["prior"] = t.prior;
        json rows = json::array();
        for (std::size_t n = 0; n < t.values.size(); ++n) {
            rows.push_back(json::array({n, t.values[n]}));
        }
        doc["rows"] = std::move(rows);
        for (const auto &[key, value] : t.extra.items()) {
            doc[key] = value;
        }
        out << doc.dump(2) << '\n';
        return;
    }
    out << "n,value\n";
    for (std::size_t n = 0; n < t.values.size(); ++n) {
        out << n << ',' << format_number(t.values[n]) << '\n';
    }
    for (const auto &c : t.comments) {
        out << "# " << c << '\n';
    }
}

void add_support(Table &t, rm_state_t state) {
    std::size_t min_n = 0, final_min = 0, gap_count = 0;
    rm_state_support(state, &min_n, &final_min, &gap_count);
    json gaps = json::array();
    std::string gap_text;
    for (std::size_t i = 0; i < gap_count; ++i) {
        std::size_t first = 0, last = 0;
        check(rm_state_gap(state, i, &first, &last));
        gaps.push_back(json::array({first, last}));
        gap_text += (i ? "," : "") + std::to_string(first) + "-" + std::to_string(last);
    }
    t.extra["support"] = {{"min_n", min_n}, {"implied_final_min", final_min}, {"gaps", gaps}};
    t.comments.push_back("min_n=" + std::to_string(min_n) +
                         " implied_final_min=" + std::to_string(final_min) +
                         " gaps=" + (gap_text.empty() ? "none" : gap_text));
}

Table retrodict_table(double theta, std::size_t n_max, const std::string &sequence,
                      const std::string &prior_text) {
    const Params params = make_params(theta, n_max);
    const Sequence seq = make_sequence(sequence);
    const Prior prior = make_prior(prior_text, n_max);
    rm_state_t raw = nullptr;
    check(rm_retrodict_state(params.get(), seq.get(), prior.get(), &raw));
    const State state(raw);
    Table t = make_table(theta, n_max, sequence, rm_prior_describe(prior.get()),
                         copy_weights(rm_state_distribution(state.get())));
    if (prior_text != "uniform" && t.prior == "explicit") {
        t.prior = prior_text;
    }
    add_support(t, state.get());
    return t;
}

void cmd_pom(const RunConfig &cfg, std::ostream &out) {
    const double theta = parse_theta(cfg.theta_text);
    const Params params = make_params(theta, cfg.n_max);
    const Sequence seq = make_sequence(cfg.sequence);
    rm_weights_t raw = nullptr;
    check(rm_build_pom(params.get(), seq.get(), &raw));
    const Weights pom(raw);
    write_table(make_table(theta, cfg.n_max, cfg.sequence, "none", copy_weights(pom.get())),
                cfg.format, out);
}

void cmd_predict(const RunConfig &cfg, std::ostream &out) {
    const double theta = parse_theta(cfg.theta_text);
    const Params params = make_params(theta, cfg.n_max);
    const Sequence seq = make_sequence(cfg.sequence);
    rm_weights_t raw = nullptr;
    check(rm_sequence_likelihood(params.get(), seq.get(), &raw));
    const Weights likelihood(raw);
    write_table(make_table(theta, cfg.n_max, cfg.sequence, "none",
                           copy_weights(likelihood.get())),
                cfg.format, out);
}

void cmd_retrodict(const RunConfig &cfg, std::ostream &out) {
    write_table(retrodict_table(parse_theta(cfg.theta_text), cfg.n_max, cfg.sequence,
                                cfg.prior_text),
                cfg.format, out);
}

void cmd_figure(const RunConfig &cfg, std::ostream &out) {
    std::size_t index = 0;
    check(rm_figure_find(cfg.figure_id.c_str(), &index));
    const char *id = nullptr;
    const char *sequence = nullptr;
    long cap = -1;
    check(rm_figure_info(index, &id, &sequence, &cap));
    const std::string prior = cap < 0 ? "uniform" : "cap:" + std::to_string(cap);
    Table t = retrodict_table(std::numbers::pi, cfg.n_max, sequence, prior);
    t.extra["figure"] = id;
    t.comments.insert(t.comments.begin(), std::string("figure ") + id);
    write_table(t, cfg.format, out);
}

void cmd_table1(const RunConfig &cfg, std::ostream &out) {
    const double theta = parse_theta(cfg.theta_text);
    const Params params = make_params(theta, cfg.n_max);
    json rows = json::array();
    std::ostringstream csv;
    csv << "row,max_deviation\n";
    for (const char *row : {"ee", "gg", "eg", "ge"}) {
        double deviation = 0.0;
        check(rm_table1_deviation(params.get(), row, &deviation));
        rows.push_back(json::array({row, deviation}));
        csv << row << ',' << format_number(deviation) << '\n';
    }
    if (cfg.format == "json") {
        json doc;
        doc["params"] = {{"theta", theta}, {"n_max", cfg.n_max}};
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << '\n';
    } else {
        out << csv.str();
    }
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    const double theta = parse_theta(cfg.theta_text);
    const Params params = make_params(theta, cfg.n_max);
    rm_report_t raw = nullptr;
    check(rm_verify(params.get(), &raw));
    const Report report(raw);
    json checks = json::array();
    for (std::size_t i = 0; i < rm_report_count(report.get()); ++i) {
        const char *name = nullptr;
        const char *detail = nullptr;
        int passed = 0;
        double value = 0.0, tolerance = 0.0;
        check(rm_report_check(report.get(), i, &name, &passed, &value, &tolerance, &detail));
        if (cfg.format == "json") {
            checks.push_back({{"name", name}, {"passed", passed != 0},
                              {"value", value}, {"tolerance", tolerance},
                              {"detail", detail}});
        } else {
            char numbers[64];
            std::snprintf(numbers, sizeof numbers, " value=%.3g tolerance=%g", value, tolerance);
            out << (passed ? "PASS " : "FAIL ") << name << numbers;
            if (*detail) out << " (" << detail << ')';
            out << '\n';
        }
    }
    const bool ok = rm_report_passed(report.get()) != 0;
    if (cfg.format == "json") {
        json doc;
        doc["params"] = {{"theta", theta}, {"n_max", cfg.n_max}};
        doc["passed"] = ok;
        doc["checks"] = std::move(checks);
        out << doc.dump(2) << '\n';
    }
    return ok ? kSuccess : kVerificationFailed;
}

} // namespace

std::string format_number(double value) {
    char buffer[32];
    const int len = std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return std::string(buffer, static_cast<std::size_t>(len));
}

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Micromaser field POM elements and retrodictive photon-number "
                 "distributions from atomic detection sequences"};
    app.name("retromaser");
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App *sub, bool physics_options) {
        if (physics_options) {
            sub->add_option("--sequence", cfg.sequence,
                            "detections over {e,g}, first atom first");
            sub->add_option("--theta", cfg.theta_text,
                            "coupling * interaction time in radians, or 'pi'")
                ->capture_default_str();
        }
        sub->add_option("--n-max", cfg.n_max, "photon-number cutoff")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")
            ->capture_default_str()
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", cfg.output, "output file (default: stdout)");
    };

    auto *pom = app.add_subcommand("pom", "POM coefficients C_n for a sequence");
    add_common(pom, true);
    auto *retrodict = app.add_subcommand("retrodict", "normalized initial photon-number distribution");
    add_common(retrodict, true);
    retrodict->add_option("--prior", cfg.prior_text, "uniform | cap:K | FILE")
        ->capture_default_str();
    auto *predict = app.add_subcommand("predict", "forward likelihood P(sequence | n)");
    add_common(predict, true);
    auto *figure = app.add_subcommand("figure", "distribution for a preset figure scenario (theta = pi)");
    add_common(figure, false);
    figure->add_option("id", cfg.figure_id, "1a 1b 2a 2b 2c 3 4a 4b")->required();
    auto *table1 = app.add_subcommand("table1", "two-atom closed forms vs POM builder");
    table1->add_option("--theta", cfg.theta_text, "radians or 'pi'")->capture_default_str();
    add_common(table1, false);
    auto *verify = app.add_subcommand("verify", "run the model invariants");
    verify->add_option("--theta", cfg.theta_text, "radians or 'pi'")->capture_default_str();
    add_common(verify, false);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    std::ofstream file;
    std::ostringstream buffer;
    int status = kSuccess;
    try {
        if (pom->parsed()) {
            cmd_pom(cfg, buffer);
        } else if (retrodict->parsed()) {
            cmd_retrodict(cfg, buffer);
        } else if (predict->parsed()) {
            cmd_predict(cfg, buffer);
        } else if (figure->parsed()) {
            cmd_figure(cfg, buffer);
        } else if (table1->parsed()) {
            cmd_table1(cfg, buffer);
        } else if (verify->parsed()) {
            status = cmd_verify(cfg, buffer);
        }
    } catch (const CommandError &e) {
        err << "retromaser: " << e.what() << '\n';
        return e.exit_code;
    }

    if (cfg.output.empty()) {
        out << buffer.str();
    } else {
        file.open(cfg.output, std::ios::binary | std::ios::trunc);
        if (!file || !(file << buffer.str()) || !file.flush()) {
            err << "retromaser: cannot write '" << cfg.output << "'\n";
            return kUsageError;
        }
    }
    if (status == kVerificationFailed) {
        err << "retromaser: verification failed\n";
    }
    return status;
}

} // namespace retromaser::cli
