#include "lllshift/io.hpp"

#include "lllshift/error.hpp"

#include <algorithm>
#include <fstream>

namespace lllshift::io {

namespace {

template <class F>
auto wrap_json_errors(const char* what, F&& body) -> decltype(body())
{
    try {
        return body();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed ") + what + ": " + e.what());
    }
}

const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidArgument(std::string("missing field '") + key + "'");
    return j.at(key);
}

json enclosure_to_json(const Enclosure& e)
{
    return {{"lower", to_string(e.lower)},
            {"upper", to_string(e.upper)},
            {"lower_approx", to_double(e.lower)},
            {"upper_approx", to_double(e.upper)}};
}

} // namespace

json group_to_json(const GroupContext& ctx)
{
    struct Visitor {
        json operator()(const IntegerLattice& l) const { return {{"family", "lattice"}, {"dim", l.dimension}}; }
        json operator()(const CyclicProduct& c) const { return {{"family", "cyclic"}, {"moduli", c.moduli}}; }
        json operator()(const FreeGroup& f) const { return {{"family", "free"}, {"rank", f.rank}}; }
        json operator()(const FiniteTable& t) const
        {
            return {{"family", "table"}, {"mul", t.mul}, {"identity", t.identity}};
        }
    };
    return std::visit(Visitor{}, ctx.family());
}

GroupContext group_from_json(const json& j)
{
    return wrap_json_errors("group spec", [&] {
        const auto family = require(j, "family").get<std::string>();
        if (family == "lattice")
            return GroupContext::lattice(require(j, "dim").get<std::size_t>());
        if (family == "cyclic")
            return GroupContext::cyclic(require(j, "moduli").get<std::vector<std::int64_t>>());
        if (family == "free")
            return GroupContext::free_group(require(j, "rank").get<std::size_t>());
        if (family == "table") {
            auto mul = require(j, "mul").get<std::vector<std::vector<std::size_t>>>();
            const auto identity = j.value("identity", std::size_t{0});
            auto inv = j.value("inv", std::vector<std::size_t>{});
            return GroupContext::table(std::move(mul), identity, std::move(inv));
        }
        throw InvalidArgument("unknown group family '" + family + "'");
    });
}

json element_to_json(const GroupContext& ctx, const GroupElement& g)
{
    ctx.validate(g);
    if (std::holds_alternative<FiniteTable>(ctx.family()))
        return g[0];
    return json(std::vector<std::int64_t>(g.coords().begin(), g.coords().end()));
}

GroupElement element_from_json(const GroupContext& ctx, const json& j)
{
    return wrap_json_errors("group element", [&] {
        if (std::holds_alternative<FiniteTable>(ctx.family())) {
            auto g = j.is_array() ? GroupElement(j.get<std::vector<std::int64_t>>())
                                  : GroupElement({j.get<std::int64_t>()});
            ctx.validate(g);
            return g;
        }
        return ctx.canonicalize(GroupElement(j.get<std::vector<std::int64_t>>()));
    });
}

json set_to_json(const GroupContext& ctx, const ElementSet& s)
{
    json out = json::array();
    for (const auto& g : s)
        out.push_back(element_to_json(ctx, g));
    return out;
}

ElementSet set_from_json(const GroupContext& ctx, const json& j)
{
    if (!j.is_array())
        throw InvalidArgument("element set must be a JSON array");
    std::vector<GroupElement> out;
    out.reserve(j.size());
    for (const auto& e : j)
        out.push_back(element_from_json(ctx, e));
    return ElementSet(std::move(out));
}

json pattern_to_json(const GroupContext& ctx, const Pattern& p)
{
    return {{"support", set_to_json(ctx, p.support())}, {"values", p.values()}};
}

Pattern pattern_from_json(const GroupContext& ctx, const json& j, Symbol k)
{
    return wrap_json_errors("pattern", [&] {
        const auto& support = require(j, "support");
        const auto values = require(j, "values").get<std::vector<Symbol>>();
        if (!support.is_array() || support.size() != values.size())
            throw InvalidArgument("pattern support and values must be arrays of equal length");
        // values follow the order given in the file; re-key them to canonical order
        std::vector<std::pair<GroupElement, Symbol>> pairs;
        for (std::size_t i = 0; i < values.size(); ++i)
            pairs.emplace_back(element_from_json(ctx, support[i]), values[i]);
        std::sort(pairs.begin(), pairs.end());
        for (std::size_t i = 1; i < pairs.size(); ++i)
            if (pairs[i].first == pairs[i - 1].first)
                throw InvalidArgument("pattern support repeats element " + to_string(pairs[i].first));
        std::vector<GroupElement> elems;
        std::vector<Symbol> vals;
        for (auto& [g, v] : pairs) {
            elems.push_back(std::move(g));
            vals.push_back(v);
        }
        return Pattern(ElementSet(std::move(elems)), std::move(vals), k);
    });
}

ShiftConfig shift_config_from_json(const json& j)
{
    return wrap_json_errors("shift config", [&] {
        auto group = group_from_json(require(j, "group"));
        const auto k_raw = require(j, "k").get<std::int64_t>();
        if (k_raw < 1)
            throw InvalidArgument("k must be >= 1");
        const auto k = static_cast<Symbol>(k_raw);
        auto pattern = pattern_from_json(group, require(j, "pattern"), k);
        auto f = set_from_json(group, require(j, "F"));
        if (f.empty())
            throw InvalidArgument("F must be nonempty");

        ElementSet core;
        ElementSet universe;
        if (group.is_finite()) {
            core = group.all_elements();
            universe = core;
        } else {
            const auto core_radius = require(j, "core_radius").get<std::size_t>();
            const auto universe_radius =
                j.contains("universe_radius")
                    ? j.at("universe_radius").get<std::size_t>()
                    : required_universe_radius(group, pattern.support(), f, core_radius);
            core = group.ball(core_radius);
            universe = group.ball(universe_radius);
        }
        std::optional<ElementSet> explicit_l;
        if (j.contains("L"))
            explicit_l = set_from_json(group, j.at("L"));
        return ShiftConfig{std::move(group), std::move(pattern), std::move(f), std::move(core), std::move(universe),
                           std::move(explicit_l)};
    });
}

json instance_to_json(const Instance& inst)
{
    const auto& uni = inst.universe();
    json out;
    out["universe"] = {{"k", uni.alphabet_size()}, {"variables", uni.names()}};
    json events = json::array();
    const GroupContext* group = nullptr;
    for (const auto& b : inst.events()) {
        json names = json::array();
        for (auto v : b.domain())
            names.push_back(uni.name(v));
        if (b.is_explicit()) {
            events.push_back({{"domain", names}, {"forbidden", b.forbidden()}});
            continue;
        }
        const auto* shift = dynamic_cast<const ShiftBlockEvent*>(b.body());
        if (!shift)
            throw InvalidArgument("cannot serialize implicit event of kind '" + b.body()->kind() + "'");
        if (!group)
            group = &shift->group();
        else if (!(*group == shift->group()))
            throw InvalidArgument("instance mixes shift events over different groups");
        const auto& ctx = shift->group();
        events.push_back({{"domain", names},
                          {"generator",
                           {{"kind", shift->kind()},
                            {"gamma", element_to_json(ctx, shift->gamma())},
                            {"L", set_to_json(ctx, shift->l())},
                            {"pattern", pattern_to_json(ctx, shift->pattern())}}}});
    }
    if (group)
        out["group"] = group_to_json(*group);
    out["events"] = std::move(events);
    return out;
}

Instance instance_from_json(const json& j)
{
    return wrap_json_errors("instance", [&] {
        const auto& u = require(j, "universe");
        const auto k_raw = require(u, "k").get<std::int64_t>();
        if (k_raw < 1)
            throw InvalidArgument("k must be >= 1");
        const auto k = static_cast<Symbol>(k_raw);
        VariableUniverse universe(require(u, "variables").get<std::vector<std::string>>(), k);

        std::shared_ptr<const GroupContext> group;
        if (j.contains("group"))
            group = std::make_shared<const GroupContext>(group_from_json(j.at("group")));

        std::vector<BadEvent> events;
        const auto& ev = require(j, "events");
        if (!ev.is_array())
            throw InvalidArgument("events must be an array");
        for (const auto& e : ev) {
            std::vector<VariableId> domain;
            for (const auto& name : require(e, "domain"))
                domain.push_back(universe.index_of(name.get<std::string>()));
            if (e.contains("forbidden")) {
                events.push_back(
                    BadEvent::make_explicit(std::move(domain), e.at("forbidden").get<std::vector<std::vector<Symbol>>>()));
                continue;
            }
            const auto& gen = require(e, "generator");
            const auto kind = require(gen, "kind").get<std::string>();
            if (kind != "shift_block")
                throw InvalidArgument("unknown event generator '" + kind + "'");
            if (!group)
                throw InvalidArgument("shift_block events need a top-level group");
            auto body = std::make_shared<const ShiftBlockEvent>(
                group, element_from_json(*group, require(gen, "gamma")), set_from_json(*group, require(gen, "L")),
                pattern_from_json(*group, require(gen, "pattern"), k));
            std::vector<VariableId> expected;
            for (const auto& g : body->domain())
                expected.push_back(universe.index_of(variable_name(g)));
            if (expected != domain)
                throw InvalidArgument("listed domain of shift event at gamma " + to_string(body->gamma())
                                      + " does not match D L^-1 gamma");
            events.push_back(BadEvent::make_implicit(std::move(domain), std::move(body)));
        }
        return Instance(std::move(universe), std::move(events));
    });
}

json assignment_to_json(const VariableUniverse& universe, const Assignment& f)
{
    if (f.size() != universe.size())
        throw InvalidArgument("assignment size does not match the universe");
    json out = json::object();
    for (VariableId v = 0; v < f.size(); ++v)
        out[universe.name(v)] = f[v];
    return out;
}

Assignment assignment_from_json(const VariableUniverse& universe, const json& j)
{
    return wrap_json_errors("assignment", [&] {
        if (!j.is_object())
            throw InvalidArgument("assignment must be a JSON object");
        Assignment f(universe.size(), 0);
        std::vector<bool> seen(universe.size(), false);
        for (const auto& [name, value] : j.items()) {
            const auto v = universe.index_of(name);
            const auto s = value.get<std::int64_t>();
            if (s < 0 || s >= static_cast<std::int64_t>(universe.alphabet_size()))
                throw InvalidArgument("symbol for '" + name + "' outside the alphabet");
            f[v] = static_cast<Symbol>(s);
            seen[v] = true;
        }
        for (VariableId v = 0; v < seen.size(); ++v)
            if (!seen[v])
                throw InvalidArgument("assignment misses variable '" + universe.name(v) + "'");
        return f;
    });
}

json trap_report_to_json(const GroupContext& ctx, const TrapReport& report)
{
    json verdicts = json::array();
    for (const auto& v : report.verdicts)
        verdicts.push_back({{"gamma", element_to_json(ctx, v.gamma)},
                            {"witness", v.witness ? element_to_json(ctx, *v.witness) : json(nullptr)}});
    return {{"total", report.verdicts.size()},
            {"trapped", report.trapped},
            {"untrapped", report.untrapped},
            {"all_trapped", report.all_trapped()},
            {"verdicts", std::move(verdicts)}};
}

json correctness_to_json(const CorrectnessReport& report)
{
    return {{"verdict", to_string(report.verdict)},
            {"p", to_string(report.p)},
            {"d", report.d},
            {"e_p_d_plus_1", enclosure_to_json(report.product)}};
}

json bounds_report_to_json(const BoundsReport& r)
{
    return {{"d_size", r.d_size},
            {"l_size", r.l_size},
            {"ell0", r.ell0},
            {"measured_degree", r.measured_degree},
            {"degree_bound", r.degree_bound.str()},
            {"degree_ok", r.degree_ok},
            {"closed_form_probability", to_string(r.closed_form_probability)},
            {"measured_probability", to_string(r.measured_probability)},
            {"probability_ok", r.probability_ok},
            {"hypothesis_met", r.hypothesis_met},
            {"endgame", enclosure_to_json(r.endgame)},
            {"endgame_holds", r.endgame_holds},
            {"correctness", correctness_to_json(r.correctness)},
            {"notes", r.notes}};
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidArgument("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

} // namespace lllshift::io
