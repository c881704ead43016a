#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canbase/emit.hpp"
#include "canbase/fixtures.hpp"
#include "canbase/hecke.hpp"
#include "canbase/json_io.hpp"
#include "canbase/pairing.hpp"

namespace canbase {

enum class command_kind { canbase, hecke, selftest };
enum class output_format { json, pretty, latex };

enum class emit_kind { kp, orbits, patterns, psi, l, d, p, q, multiplicities, h, f, dims };

inline const std::vector<std::pair<std::string_view, emit_kind>>& emit_names() {
    static const std::vector<std::pair<std::string_view, emit_kind>> names = {
        {"kp", emit_kind::kp},       {"orbits", emit_kind::orbits},
        {"patterns", emit_kind::patterns}, {"psi", emit_kind::psi},
        {"l", emit_kind::l},         {"d", emit_kind::d},
        {"p", emit_kind::p},         {"q", emit_kind::q},
        {"multiplicities", emit_kind::multiplicities}, {"h", emit_kind::h},
        {"f", emit_kind::f},         {"dims", emit_kind::dims},
    };
    return names;
}

inline std::string_view emit_name(emit_kind kind) {
    for (const auto& [name, k] : emit_names())
        if (k == kind) return name;
    return "?";
}

/// Parses a comma-separated emit list such as "p,q".
inline std::vector<emit_kind> parse_emit(std::string_view text) {
    std::vector<emit_kind> kinds;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view token = text.substr(pos, comma - pos);
        bool found = false;
        for (const auto& [name, kind] : emit_names())
            if (token == name) {
                kinds.push_back(kind);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("unknown emit kind: " + std::string(token));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (kinds.empty()) throw std::invalid_argument("emit list must be nonempty");
    return kinds;
}

struct run_config {
    dim_vector dimvec;
    command_kind command = command_kind::canbase;
    std::vector<emit_kind> emit;
    output_format format = output_format::json;
    unsigned workers = 1;
    std::uint64_t max_summands = default_max_summands;
};

struct run_report {
    int exit_code = 0;
    std::string output;
    ordered_json json; // filled when format == json
    std::vector<std::string> diagnostics;
};

namespace detail {

inline void append_line(std::string& out, const std::string& line) {
    out += line;
    out += '\n';
}

struct pipeline_state {
    pairing_context ctx;
    triangular_system sys;
    std::optional<std::vector<rat_func>> h;
    std::optional<std::vector<int_laurent>> f;
};

inline pipeline_state run_pipeline(const run_config& cfg, bool with_hecke,
                                   std::vector<std::string>& diagnostics) {
    if (!fixtures::patterns_validate())
        throw std::logic_error("pattern validation gate failed; flag convention is broken");
    pipeline_state st;
    st.ctx = pairing_context::build(cfg.dimvec);
    st.sys = build_triangular_system(st.ctx, cfg.workers, cfg.max_summands);
    for (std::size_t i = 0; i < st.sys.p.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (const auto& [e, c] : st.sys.p(i, j).terms())
                if (c < 0)
                    diagnostics.push_back("warning: P entry (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ") has a negative coefficient: " +
                                          to_pretty(st.sys.p(i, j)));
    if (with_hecke) {
        const hecke_context hctx = hecke_context::build(cfg.dimvec);
        st.h = h_vector(hctx, st.ctx, cfg.workers, cfg.max_summands);
        st.f = f_vector(st.sys, *st.h);
        for (std::size_t i = 0; i < st.f->size(); ++i)
            for (const auto& [e, c] : (*st.f)[i].terms())
                if (c < 0)
                    diagnostics.push_back("error: F entry " + std::to_string(i + 1) +
                                          " has a negative coefficient: " + to_pretty((*st.f)[i]));
    }
    return st;
}

inline ordered_json report_header(const run_config& cfg, std::string_view command) {
    ordered_json j;
    j["schema"] = std::string(report_schema);
    j["command"] = std::string(command);
    j["dimvec"] = cfg.dimvec.entries();
    ordered_json roots = ordered_json::array();
    for (const auto& r : positive_roots_ordered(cfg.dimvec.size()))
        roots.push_back(std::vector<int>{r.first + 1, r.last + 1});
    j["root_order"] = std::move(roots);
    return j;
}

inline void emit_header_text(std::string& out, const run_config& cfg, std::string_view command,
                             const pipeline_state& st) {
    append_line(out, std::string(command) + " for dimvec " + [&] {
        std::string s;
        for (int j = 0; j < cfg.dimvec.size(); ++j)
            s += (j ? "," : "") + std::to_string(cfg.dimvec[j]);
        return s;
    }());
    append_line(out, "basis order (Kostant partitions, ascending orbit dimension):");
    for (std::size_t i = 0; i < st.ctx.order.size(); ++i) {
        std::string line = "  c" + std::to_string(i + 1) + " = (";
        for (int k = 0; k < st.ctx.order[i].size(); ++k)
            line += (k ? "," : "") + std::to_string(st.ctx.order[i][k]);
        append_line(out, line + ")");
    }
}

inline run_report render(const run_config& cfg, std::string_view command, const pipeline_state& st,
                         const std::vector<emit_kind>& kinds,
                         std::vector<std::string> diagnostics) {
    run_report report;
    report.diagnostics = std::move(diagnostics);
    const hecke_context hctx = hecke_context::build(cfg.dimvec);

    if (cfg.format == output_format::json) {
        ordered_json j = report_header(cfg, command);
        ordered_json kps = ordered_json::array();
        for (const auto& c : st.ctx.order) kps.push_back(kp_to_json(c));
        j["kostant_partitions"] = std::move(kps);
        for (emit_kind kind : kinds) {
            switch (kind) {
                case emit_kind::kp:
                    break; // legend is always present
                case emit_kind::orbits:
                    j["orbits"] = st.ctx.orbit_dims;
                    break;
                case emit_kind::patterns: {
                    ordered_json ps = ordered_json::array();
                    for (const auto& p : st.ctx.patterns) ps.push_back(pattern_to_json(p));
                    j["patterns"] = std::move(ps);
                    break;
                }
                case emit_kind::psi:
                    j["psi"] = rat_matrix_to_json(st.sys.psi);
                    break;
                case emit_kind::l:
                    j["l"] = laurent_matrix_to_json(st.sys.l);
                    break;
                case emit_kind::d: {
                    ordered_json d = ordered_json::array();
                    for (const auto& x : st.sys.d) d.push_back(rat_to_json(x));
                    j["d"] = std::move(d);
                    break;
                }
                case emit_kind::p:
                    j["p"] = laurent_matrix_to_json(st.sys.p);
                    break;
                case emit_kind::q:
                    j["q"] = laurent_matrix_to_json(st.sys.q);
                    break;
                case emit_kind::multiplicities: {
                    const matrix<bigint> m = standard_multiplicities(st.sys);
                    j["multiplicities"] = matrix_to_json(m, [](const bigint& x) { return bigint_to_json(x); });
                    break;
                }
                case emit_kind::h: {
                    ordered_json h = ordered_json::array();
                    for (const auto& x : *st.h) h.push_back(rat_to_json(x));
                    j["h"] = std::move(h);
                    break;
                }
                case emit_kind::f: {
                    ordered_json f = ordered_json::array();
                    for (const auto& x : *st.f) f.push_back(laurent_to_json(x));
                    j["f"] = std::move(f);
                    break;
                }
                case emit_kind::dims: {
                    ordered_json dims = ordered_json::array();
                    for (const auto& x : simple_dims(*st.f)) dims.push_back(bigint_to_json(x));
                    j["dims"] = std::move(dims);
                    break;
                }
            }
        }
        report.json = std::move(j);
        report.output = report.json.dump(2) + "\n";
        return report;
    }

    const text_style style = cfg.format == output_format::latex ? text_style::latex : text_style::pretty;
    std::string out;
    emit_header_text(out, cfg, command, st);
    const denominator_factors gram_den = generic_denominator(cfg.dimvec);
    for (emit_kind kind : kinds) {
        switch (kind) {
            case emit_kind::kp:
                break;
            case emit_kind::orbits: {
                std::string line = "orbit dimensions:";
                for (long long dmn : st.ctx.orbit_dims) line += " " + std::to_string(dmn);
                append_line(out, line);
                break;
            }
            case emit_kind::patterns:
                append_line(out, "patterns:");
                for (const auto& p : st.ctx.patterns) append_line(out, "  " + pattern_text(p));
                break;
            case emit_kind::psi: {
                append_line(out, "Psi =");
                const auto text = matrix_text_over_denominator(st.sys.psi, gram_den, style);
                if (text) {
                    append_line(out, *text);
                } else {
                    for (std::size_t i = 0; i < st.sys.psi.rows(); ++i) {
                        std::string line = "  ";
                        for (std::size_t jj = 0; jj < st.sys.psi.cols(); ++jj)
                            line += to_text(st.sys.psi(i, jj), style) + "  ";
                        append_line(out, line);
                    }
                }
                break;
            }
            case emit_kind::l:
                append_line(out, "L =");
                append_line(out, matrix_text(st.sys.l, style));
                break;
            case emit_kind::d: {
                append_line(out, "D = diagonal of");
                const auto text = vector_text_over_denominator(st.sys.d, gram_den, style);
                if (text) {
                    append_line(out, *text);
                } else {
                    for (const auto& x : st.sys.d) append_line(out, "  " + to_text(x, style));
                }
                break;
            }
            case emit_kind::p:
                append_line(out, "P =");
                append_line(out, matrix_text(st.sys.p, style));
                break;
            case emit_kind::q:
                append_line(out, "Q =");
                append_line(out, matrix_text(st.sys.q, style));
                break;
            case emit_kind::multiplicities: {
                append_line(out, "standard module multiplicities [M_i : L_j]:");
                const matrix<bigint> m = standard_multiplicities(st.sys);
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    std::string line = "  ";
                    for (std::size_t jj = 0; jj < m.cols(); ++jj) line += m(i, jj).str() + " ";
                    append_line(out, line);
                }
                break;
            }
            case emit_kind::h: {
                append_line(out, "H =");
                const auto text =
                    vector_text_over_denominator(*st.h, borel_denominator(hctx.n), style);
                if (text) {
                    append_line(out, *text);
                } else {
                    for (const auto& x : *st.h) append_line(out, "  " + to_text(x, style));
                }
                break;
            }
            case emit_kind::f:
                append_line(out, "F =");
                for (const auto& x : *st.f) append_line(out, "  " + to_text(x, style));
                break;
            case emit_kind::dims: {
                std::string line = "simple module dimensions:";
                for (const auto& x : simple_dims(*st.f)) line += " " + x.str();
                append_line(out, line);
                break;
            }
        }
    }
    report.output = std::move(out);
    return report;
}

} // namespace detail

/// Steps 1-3: Psi, the LDLT factors and the QP split, emitted in pipeline
/// order with the Kostant-partition legend.
inline run_report run_canbase(const run_config& cfg) {
    std::vector<emit_kind> kinds =
        cfg.emit.empty() ? std::vector<emit_kind>{emit_kind::p, emit_kind::q} : cfg.emit;
    for (emit_kind kind : kinds)
        if (kind == emit_kind::multiplicities || kind == emit_kind::h || kind == emit_kind::f ||
            kind == emit_kind::dims)
            throw std::invalid_argument(std::string(emit_name(kind)) +
                                        " requires the hecke command");
    std::vector<std::string> diagnostics;
    const detail::pipeline_state st = detail::run_pipeline(cfg, false, diagnostics);
    return detail::render(cfg, "canbase", st, kinds, std::move(diagnostics));
}

/// Steps 1-4 of the simple-dimension algorithm: multiplicities, H, F and
/// the dimensions, on top of everything the canbase command provides.
inline run_report run_hecke(const run_config& cfg) {
    const std::vector<emit_kind> kinds =
        cfg.emit.empty() ? std::vector<emit_kind>{emit_kind::dims} : cfg.emit;
    std::vector<std::string> diagnostics;
    const detail::pipeline_state st = detail::run_pipeline(cfg, true, diagnostics);
    return detail::render(cfg, "hecke", st, kinds, std::move(diagnostics));
}

/// Runs every reference fixture and reports bit-exact comparisons; exit code
/// 0 iff all pass. With list_only, prints the fixture names.
inline run_report run_selftest(bool list_only = false) {
    run_report report;
    const std::vector<fixtures::fixture> all = fixtures::all_fixtures();
    if (list_only) {
        for (const auto& f : all) detail::append_line(report.output, f.name);
        return report;
    }
    std::size_t passed = 0;
    for (const auto& f : all) {
        const fixtures::fixture_outcome outcome = fixtures::run_fixture(f);
        if (outcome.passed) {
            ++passed;
            detail::append_line(report.output, "[PASS] " + outcome.name);
        } else {
            detail::append_line(report.output, "[FAIL] " + outcome.name);
            detail::append_line(report.output, "  expected:");
            std::istringstream exp(outcome.expected);
            for (std::string line; std::getline(exp, line);)
                detail::append_line(report.output, "    " + line);
            detail::append_line(report.output, "  actual:");
            std::istringstream act(outcome.actual);
            for (std::string line; std::getline(act, line);)
                detail::append_line(report.output, "    " + line);
        }
    }
    detail::append_line(report.output, std::to_string(passed) + "/" + std::to_string(all.size()) +
                                           " fixtures passed");
    report.exit_code = passed == all.size() ? 0 : 1;
    return report;
}

} // namespace canbase
