#include "igt/cli.hpp"

#include "igt/analysis.hpp"
#include "igt/constructions.hpp"
#include "igt/document.hpp"
#include "igt/errors.hpp"
#include "igt/oracles.hpp"
#include "igt/reductions.hpp"
#include "igt/special_influence.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace igt::cli {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> parse_team(const std::string &s) {
    if (trim(s).empty())
        return {};
    auto ids = split(s, ',');
    for (const auto &id : ids)
        if (id.empty())
            throw InputError("empty player id in team '" + s + "'");
    return ids;
}

std::size_t parse_count(const std::string &s, const std::string &what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (s.empty() || pos != s.size() || s.front() == '-')
        throw InputError(what + ": expected a non-negative integer, got '" + s + "'");
    return static_cast<std::size_t>(v);
}

// "1,2;2,3" → {{1,2},{2,3}}; an empty segment is an empty set.
SetSystem parse_sets(std::size_t universe, const std::string &text) {
    SetSystem c;
    c.universe = universe;
    if (trim(text).empty())
        return c;
    for (const auto &segment : split(text, ';')) {
        std::vector<std::size_t> set;
        if (!segment.empty())
            for (const auto &e : split(segment, ','))
                set.push_back(parse_count(e, "set element"));
        c.sets.push_back(std::move(set));
    }
    return c;
}

std::string show(bool b) { return b ? "true" : "false"; }

std::string show(std::optional<std::int64_t> v) { return v ? std::to_string(*v) : "none"; }

std::string show_set(std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i)
        out += (i ? "," : "") + ids[i];
    return out + "}";
}

InfluenceGame as_game(const Payload &p) {
    if (auto g = std::get_if<InfluenceGame>(&p))
        return *g;
    if (auto w = std::get_if<WeightedGame>(&p))
        return from_weighted(*w);
    if (auto e = std::get_if<ExplicitGame>(&p))
        return from_minimal_winning(*e);
    throw InputError("expected a game document, got a graph");
}

InfluenceGame load_game(const std::string &path) { return as_game(load_document(path).payload); }

SimpleGraph load_graph(const std::string &path) {
    auto doc = load_document(path);
    if (auto g = std::get_if<SimpleGraph>(&doc.payload))
        return *g;
    if (auto g = std::get_if<InfluenceGame>(&doc.payload))
        return skeleton(g->graph());
    throw InputError(path + ": expected a graph or an undirected influence game");
}

void emit(std::ostream &out, Payload payload, std::map<std::string, std::string> metadata = {}) {
    out << emit_document(GameDocument{1, std::move(payload), std::move(metadata)});
}

std::map<std::string, std::string> provenance_metadata(const GadgetInstance &inst) {
    std::map<std::string, std::string> m{{"gadget", inst.provenance.gadget}, {"source", inst.provenance.source}};
    for (const auto &[k, v] : inst.provenance.parameters)
        m[k] = std::to_string(v);
    return m;
}

void print_check(std::ostream &out, const RelationCheck &r) {
    out << "relation " << (r.holds ? "holds" : "fails") << "\n";
    out << "claim: " << r.claim << "\n";
    out << "observed: " << r.observed << "\n";
}

struct CapFlags {
    std::size_t max_players = 0, combine = 0, iso = 0, oracle = 0;
    std::int64_t weight_budget = 0;

    Limits resolve() const {
        auto l = Limits::from_env();
        if (max_players)
            l.max_players = max_players;
        if (combine)
            l.combine_validation = combine;
        if (iso)
            l.iso_players = iso;
        if (oracle)
            l.oracle_elements = oracle;
        if (weight_budget)
            l.weight_budget = weight_budget;
        if (l.max_players > 62)
            throw InputError("--max-players must be at most 62");
        return l;
    }
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact analysis of influence games", "igt"};
    app.fallthrough();
    app.require_subcommand(1);

    CapFlags caps;
    app.add_option("--max-players", caps.max_players, "Enumeration cap for measures, power and properties (20)");
    app.add_option("--combine-cap", caps.combine, "Exhaustive validation cap for combine (12)");
    app.add_option("--iso-cap", caps.iso, "Player cap for isomorphism search (8)");
    app.add_option("--oracle-cap", caps.oracle, "Element cap for the brute-force oracles (20)");
    app.add_option("--weight-budget", caps.weight_budget, "Total-weight budget for unweighted realisations");

    std::string game_path, team, kind, method = "auto", player, graph_path;
    std::string from, to, mode, universe_text, sets_text, first_path, second_path;
    std::vector<std::string> files;
    bool trace = false, all = false, verify_flag = false;
    int decimal = 0;
    std::size_t k = 0;

    auto *spread_cmd = app.add_subcommand("spread", "Print F(X)");
    spread_cmd->add_option("--game", game_path)->required();
    spread_cmd->add_option("--team", team, "Comma-separated node ids");
    spread_cmd->add_flag("--trace", trace, "Print every activation round");

    auto *check_cmd = app.add_subcommand("check", "Is the team successful?");
    check_cmd->add_option("--game", game_path)->required();
    check_cmd->add_option("--team", team);

    auto *measure_cmd = app.add_subcommand("measure", "Length, Width, sLength or sWidth");
    measure_cmd->add_option("--game", game_path)->required();
    measure_cmd->add_option("--kind", kind)->required();
    measure_cmd->add_option("--method", method, "auto, brute or special");

    auto *power_cmd = app.add_subcommand("power", "Banzhaf and Shapley-Shubik values");
    power_cmd->add_option("--game", game_path)->required();
    auto *player_opt = power_cmd->add_option("--player", player);
    auto *all_opt = power_cmd->add_flag("--all", all);
    player_opt->excludes(all_opt);
    power_cmd->add_option("--decimal", decimal, "Also print indices with this many decimals");

    auto *prop_cmd = app.add_subcommand("prop", "Player, pair, team and game properties");
    prop_cmd->require_subcommand(1);
    auto *prop_player = prop_cmd->add_subcommand("player", "passer, vetoer, dictator or dummy");
    prop_player->add_option("--game", game_path)->required();
    prop_player->add_option("--player", player)->required();
    prop_player->add_option("--kind", kind)->required();
    auto *prop_pair = prop_cmd->add_subcommand("pair", "Are two players symmetric?");
    prop_pair->add_option("--game", game_path)->required();
    prop_pair->add_option("--players", team)->required();
    auto *prop_team = prop_cmd->add_subcommand("team", "critical:<player>, blocking or swing");
    prop_team->add_option("--game", game_path)->required();
    prop_team->add_option("--team", team);
    prop_team->add_option("--kind", kind)->required();
    auto *prop_game = prop_cmd->add_subcommand("game", "proper, strong or decisive");
    prop_game->add_option("--game", game_path)->required();
    prop_game->add_option("--kind", kind)->required();
    prop_game->add_option("--method", method, "auto, brute or special");

    auto *classify_cmd = app.add_subcommand("classify", "Special family of a game");
    classify_cmd->add_option("--game", game_path)->required();

    auto *convert_cmd = app.add_subcommand("convert", "Change representation");
    convert_cmd->add_option("--from", from, "wm, weighted or ig")->required();
    convert_cmd->add_option("--to", to, "ig, uig or wm")->required();
    convert_cmd->add_option("--game,game", game_path)->required();

    auto *combine_cmd = app.add_subcommand("combine", "Union or intersection of two games");
    combine_cmd->add_option("--mode", mode)->required();
    combine_cmd->add_option("files", files)->required()->expected(2);

    auto *gamma_cmd = app.add_subcommand("gamma", "Vertex-cover game of a graph");
    gamma_cmd->add_option("--graph", graph_path)->required();

    auto *compare_cmd = app.add_subcommand("compare", "Equivalence or isomorphism");
    compare_cmd->add_option("--kind", kind)->required();
    compare_cmd->add_option("files", files)->required()->expected(2);

    auto *gen_cmd = app.add_subcommand("gen", "Reduction gadgets");
    gen_cmd->require_subcommand(1);
    auto add_sets = [&](CLI::App *c) {
        c->add_option("--universe", universe_text)->required();
        c->add_option("--sets", sets_text, "Sets separated by ';', elements by ','")->required();
        c->add_flag("--verify", verify_flag, "Check the relation instead of printing the game");
    };
    auto add_graph = [&](CLI::App *c, bool with_k) {
        c->add_option("--graph", graph_path)->required();
        if (with_k)
            c->add_option("--k", k)->required();
        c->add_flag("--verify", verify_flag, "Check the relation instead of printing the output");
    };
    auto *gen_setcover = gen_cmd->add_subcommand("setcover", "Length gadget from set cover");
    add_sets(gen_setcover);
    auto *gen_setpacking = gen_cmd->add_subcommand("setpacking", "Width gadget from set packing");
    add_sets(gen_setpacking);
    auto *gen_delta1 = gen_cmd->add_subcommand("delta1", "Δ1(G, k)");
    add_graph(gen_delta1, true);
    auto *gen_delta2 = gen_cmd->add_subcommand("delta2", "Δ2(G, k)");
    add_graph(gen_delta2, true);
    auto *gen_delta3 = gen_cmd->add_subcommand("delta3", "Δ3(G)");
    add_graph(gen_delta3, false);
    auto *gen_halfvc = gen_cmd->add_subcommand("halfvc", "Ĝ from (G, k)");
    add_graph(gen_halfvc, true);
    auto *gen_isopair = gen_cmd->add_subcommand("isopair", "Equivalence pair from (G, k)");
    add_graph(gen_isopair, true);
    gen_isopair->add_option("--first", first_path, "Output file for the first game");
    gen_isopair->add_option("--second", second_path, "Output file for the second game");
    auto *gen_necessary = gen_cmd->add_subcommand("necessary", "Γ⁺: adds a necessary player x");
    gen_necessary->add_option("--game", game_path)->required();
    gen_necessary->add_flag("--verify", verify_flag, "Print the validation report only");

    auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force combinatorial oracles");
    oracle_cmd->add_option("--kind", kind)->required();
    oracle_cmd->add_option("--graph", graph_path);
    oracle_cmd->add_option("--universe", universe_text);
    oracle_cmd->add_option("--sets", sets_text);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto limits = caps.resolve();

        if (spread_cmd->parsed()) {
            const auto game = load_game(game_path);
            const auto &g = game.graph();
            const auto ids = parse_team(team);
            const auto seeds = g.make_set(ids);
            if (trace) {
                const auto t = spread_trace(g, seeds);
                for (std::size_t i = 0; i < t.steps.size(); ++i)
                    out << "F_" << i << " = " << show_set(g.names(t.steps[i])) << "\n";
                out << "converged_at = " << t.converged_at << "\n";
            } else {
                out << show_set(g.names(spread(g, seeds))) << "\n";
            }
        } else if (check_cmd->parsed()) {
            const auto game = load_game(game_path);
            out << show(is_successful(game, game.team(parse_team(team)))) << "\n";
        } else if (measure_cmd->parsed()) {
            const auto game = load_game(game_path);
            out << show(compute_measure(game, parse_measure_kind(kind), parse_method(method), limits)) << "\n";
        } else if (power_cmd->parsed()) {
            const auto game = load_game(game_path);
            if (!all && player.empty())
                throw InputError("power: give --player or --all");
            auto decimals = [&](const Rational &r) { return decimal > 0 ? " " + format_decimal(r, decimal) : ""; };
            if (all) {
                out << "player banzhaf_value banzhaf_index shapley_value shapley_index\n";
                for (const auto &r : power_all(game, limits))
                    out << r.player << " " << r.banzhaf_value << " " << format_rational(r.banzhaf_index)
                        << decimals(r.banzhaf_index) << " " << r.shapley_value << " "
                        << format_rational(r.shapley_index) << decimals(r.shapley_index) << "\n";
            } else {
                const auto r = power(game, player, limits);
                out << "player " << r.player << "\n";
                out << "banzhaf_value " << r.banzhaf_value << "\n";
                out << "banzhaf_index " << format_rational(r.banzhaf_index) << decimals(r.banzhaf_index) << "\n";
                out << "shapley_value " << r.shapley_value << "\n";
                out << "shapley_index " << format_rational(r.shapley_index) << decimals(r.shapley_index) << "\n";
            }
        } else if (prop_player->parsed()) {
            const auto game = load_game(game_path);
            const bool v = kind == "dummy" ? is_dummy(game, player, limits)
                                           : player_property(game, player, parse_player_property(kind));
            out << show(v) << "\n";
        } else if (prop_pair->parsed()) {
            const auto game = load_game(game_path);
            const auto ids = parse_team(team);
            if (ids.size() != 2)
                throw InputError("--players expects exactly two ids");
            out << show(are_symmetric(game, ids[0], ids[1], limits)) << "\n";
        } else if (prop_team->parsed()) {
            const auto game = load_game(game_path);
            const auto ids = parse_team(team);
            bool v = false;
            if (kind.rfind("critical:", 0) == 0)
                v = is_critical(game, ids, kind.substr(9));
            else if (kind == "blocking")
                v = is_blocking(game, ids);
            else if (kind == "swing")
                v = is_swing(game, ids);
            else
                throw InputError("unknown team property '" + kind + "'");
            out << show(v) << "\n";
        } else if (prop_game->parsed()) {
            const auto game = load_game(game_path);
            out << show(compute_game_property(game, parse_game_property(kind), parse_method(method), limits)) << "\n";
        } else if (classify_cmd->parsed()) {
            out << to_string(classify(load_game(game_path))) << "\n";
        } else if (convert_cmd->parsed()) {
            auto doc = load_document(game_path);
            if (from == "wm") {
                const auto *e = std::get_if<ExplicitGame>(&doc.payload);
                if (!e)
                    throw InputError("--from wm expects an explicit_game document");
                if (to != "ig" && to != "uig")
                    throw InputError("--from wm converts to ig or uig");
                emit(out, from_minimal_winning(*e));
            } else if (from == "weighted") {
                const auto *w = std::get_if<WeightedGame>(&doc.payload);
                if (!w)
                    throw InputError("--from weighted expects a weighted_game document");
                if (to == "ig")
                    emit(out, from_weighted(*w));
                else if (to == "uig")
                    emit(out, from_weighted_unweighted(*w, {}, limits));
                else
                    throw InputError("--from weighted converts to ig or uig");
            } else if (from == "ig") {
                if (to != "wm")
                    throw InputError("--from ig converts to wm");
                emit(out, to_explicit(as_game(doc.payload), limits));
            } else {
                throw InputError("unknown --from '" + from + "'");
            }
        } else if (combine_cmd->parsed()) {
            const auto m = parse_combine_mode(mode);
            auto a = load_document(files[0]).payload, b = load_document(files[1]).payload;
            const auto *wa = std::get_if<WeightedGame>(&a), *wb = std::get_if<WeightedGame>(&b);
            const auto *ea = std::get_if<ExplicitGame>(&a), *eb = std::get_if<ExplicitGame>(&b);
            if (wa && wb)
                emit(out, combine_weighted(*wa, *wb, m));
            else if (ea && eb)
                emit(out, explicit_combine(*ea, *eb, m));
            else
                emit(out, combine(as_game(a), as_game(b), m, limits));
        } else if (gamma_cmd->parsed()) {
            emit(out, vertex_cover_game(load_graph(graph_path)));
        } else if (compare_cmd->parsed()) {
            const auto a = load_game(files[0]), b = load_game(files[1]);
            if (kind == "equiv") {
                out << show(equivalent(a, b, limits)) << "\n";
            } else if (kind == "iso") {
                const auto phi = isomorphic(a, b, limits);
                out << show(phi.has_value()) << "\n";
                if (phi)
                    for (const auto &[x, y] : *phi)
                        out << x << " -> " << y << "\n";
            } else {
                throw InputError("unknown comparison '" + kind + "'");
            }
        } else if (gen_cmd->parsed()) {
            auto gadget = [&](const GadgetInstance &inst) {
                if (verify_flag)
                    print_check(out, verify(inst, limits));
                else
                    emit(out, inst.game, provenance_metadata(inst));
            };
            if (gen_setcover->parsed() || gen_setpacking->parsed()) {
                const auto c = parse_sets(parse_count(universe_text, "--universe"), sets_text);
                gadget(gen_setcover->parsed() ? gen_setcover_length_game(c) : gen_setpacking_width_game(c));
            } else if (gen_delta1->parsed()) {
                gadget(igt::gen_delta1(load_graph(graph_path), k));
            } else if (gen_delta2->parsed()) {
                gadget(igt::gen_delta2(load_graph(graph_path), k));
            } else if (gen_delta3->parsed()) {
                gadget(igt::gen_delta3(load_graph(graph_path)));
            } else if (gen_halfvc->parsed()) {
                const auto g = load_graph(graph_path);
                if (verify_flag)
                    print_check(out, verify_half_vc(g, k, limits));
                else
                    emit(out, gen_half_vc_graph(g, k),
                         {{"gadget", "halfvc"}, {"source", describe(g)}, {"k", std::to_string(k)}});
            } else if (gen_isopair->parsed()) {
                const auto g = load_graph(graph_path);
                if (verify_flag) {
                    print_check(out, verify_iso_pair(g, k, limits));
                } else {
                    if (first_path.empty() || second_path.empty())
                        throw InputError("gen isopair writes two games: give --first and --second");
                    const auto [a, b] = igt::gen_iso_pair(g, k, limits);
                    const std::map<std::string, std::string> meta{
                        {"gadget", "isopair"}, {"source", describe(g)}, {"k", std::to_string(k)}};
                    for (const auto &[path, game] : {std::pair{first_path, a}, std::pair{second_path, b}}) {
                        std::ofstream f(path, std::ios::binary);
                        if (!f)
                            throw InputError("cannot write '" + path + "'");
                        f << emit_document(GameDocument{1, game, meta});
                    }
                    out << first_path << "\n" << second_path << "\n";
                }
            } else if (gen_necessary->parsed()) {
                const auto r = gen_necessary_player(load_game(game_path));
                std::string status = !r.report.validated ? "skipped" : r.report.holds ? "pass" : "fail";
                std::string violations;
                for (const auto &v : r.report.violations)
                    violations += (violations.empty() ? "" : " ") + v;
                if (verify_flag) {
                    out << "validation " << status << "\n";
                    out << "teams_checked " << r.report.teams_checked << "\n";
                    if (!violations.empty())
                        out << "violations " << violations << "\n";
                } else {
                    std::map<std::string, std::string> meta{{"gadget", "necessary"},
                                                            {"validation", status},
                                                            {"teams_checked", std::to_string(r.report.teams_checked)}};
                    if (!violations.empty())
                        meta["violations"] = violations;
                    emit(out, r.game, meta);
                }
            }
        } else if (oracle_cmd->parsed()) {
            const auto which = oracle::parse_kind(kind);
            const bool sets = which == oracle::Kind::MinSetCover || which == oracle::Kind::MaxSetPacking;
            if (sets) {
                if (universe_text.empty())
                    throw InputError("this oracle needs --universe and --sets");
                const auto c = parse_sets(parse_count(universe_text, "--universe"), sets_text);
                if (which == oracle::Kind::MinSetCover) {
                    const auto v = oracle::min_set_cover(c, limits);
                    out << (v ? std::to_string(*v) : "none") << "\n";
                } else {
                    out << oracle::max_set_packing(c, limits) << "\n";
                }
            } else {
                if (graph_path.empty())
                    throw InputError("this oracle needs --graph");
                const auto g = load_graph(graph_path);
                if (which == oracle::Kind::MinVertexCover)
                    out << oracle::min_vertex_cover(g, limits) << "\n";
                else if (which == oracle::Kind::CountVertexCovers)
                    out << oracle::count_vertex_covers(g, limits) << "\n";
                else
                    out << oracle::max_independent_set(g, limits) << "\n";
            }
        }
        return 0;
    } catch (const ResourceError &e) {
        err << "igt: resource limit: " << e.what() << "\n";
        return 3;
    } catch (const InputError &e) {
        err << "igt: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError &e) {
        err << "igt: invalid: " << e.what() << "\n";
        return 2;
    }
}

} // namespace igt::cli
