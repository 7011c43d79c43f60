#include "endolab/json_io.hpp"
#include "endolab/errors.hpp"

#include <fstream>

namespace endolab {

using nlohmann::json;

namespace {

const json & expect(const json & j, const char * key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidParameter(std::string("json: missing key '") + key + "'");
    return j.at(key);
}

int expect_int(const json & j, const char * key)
{
    const json & v = expect(j, key);
    if (!v.is_number_integer())
        throw InvalidParameter(std::string("json: key '") + key + "' is not an integer");
    return v.get<int>();
}

std::vector<int> int_vector(const json & v, const char * what)
{
    if (!v.is_array())
        throw InvalidParameter(std::string("json: ") + what + " is not an array");
    std::vector<int> out;
    for (const auto & e : v) {
        if (!e.is_number_integer())
            throw InvalidParameter(std::string("json: ") + what + " contains a non-integer");
        out.push_back(e.get<int>());
    }
    return out;
}

}

json structure_to_json(const Structure & s)
{
    json rels = json::array();
    for (const auto & rel : s.relations) {
        json tuples = json::array();
        for (const auto & t : rel.tuples)
            tuples.push_back(t);
        rels.push_back({{"name", rel.name}, {"arity", rel.arity}, {"tuples", tuples}});
    }
    return {{"name", s.name}, {"domain_size", s.domain_size}, {"relations", rels}};
}

Structure structure_from_json(const json & j)
{
    const json & name = expect(j, "name");
    if (!name.is_string())
        throw InvalidParameter("json: structure name is not a string");
    int domain = expect_int(j, "domain_size");

    const json & rels = expect(j, "relations");
    if (!rels.is_array())
        throw InvalidParameter("json: relations is not an array");

    std::vector<Relation> relations;
    for (const auto & r : rels) {
        Relation rel;
        const json & rel_name = expect(r, "name");
        if (!rel_name.is_string())
            throw InvalidParameter("json: relation name is not a string");
        rel.name = rel_name.get<std::string>();
        rel.arity = expect_int(r, "arity");
        const json & tuples = expect(r, "tuples");
        if (!tuples.is_array())
            throw InvalidParameter("json: tuples is not an array");
        for (const auto & t : tuples)
            rel.tuples.push_back(int_vector(t, "tuple"));
        relations.push_back(std::move(rel));
    }
    return Structure::make(name.get<std::string>(), domain, std::move(relations));
}

json finite_map_to_json(const FiniteMap & f)
{
    return {{"source_size", f.source_size}, {"target_size", f.target_size}, {"image", f.image}};
}

FiniteMap finite_map_from_json(const json & j)
{
    return FiniteMap(expect_int(j, "source_size"), expect_int(j, "target_size"),
                     int_vector(expect(j, "image"), "image"));
}

json word_to_json(const Word & w)
{
    json coeffs = json::array();
    for (const auto & c : w.coefficients)
        coeffs.push_back(finite_map_to_json(c));
    return {{"coefficients", coeffs}};
}

Word word_from_json(const json & j)
{
    const json & coeffs = expect(j, "coefficients");
    if (!coeffs.is_array())
        throw InvalidParameter("json: coefficients is not an array");
    std::vector<FiniteMap> maps;
    for (const auto & c : coeffs)
        maps.push_back(finite_map_from_json(c));
    return Word(std::move(maps));
}

json word_pair_to_json(const WordPair & p)
{
    return {{"phi", word_to_json(p.phi)}, {"psi", word_to_json(p.psi)}};
}

WordPair word_pair_from_json(const json & j)
{
    return WordPair(word_from_json(expect(j, "phi")), word_from_json(expect(j, "psi")));
}

json wreath_to_json(const WreathElement & w)
{
    json comps = json::array();
    for (const auto & c : w.components)
        comps.push_back(finite_map_to_json(c));
    return {{"n", w.n}, {"m", w.m}, {"tau", w.tau.image}, {"components", comps}};
}

WreathElement wreath_from_json(const json & j)
{
    WreathElement w;
    w.n = expect_int(j, "n");
    w.m = expect_int(j, "m");
    std::vector<int> tau = int_vector(expect(j, "tau"), "tau");
    w.tau = FiniteMap(w.n, w.n, std::move(tau));
    const json & comps = expect(j, "components");
    if (!comps.is_array())
        throw InvalidParameter("json: components is not an array");
    for (const auto & c : comps)
        w.components.push_back(finite_map_from_json(c));
    validate_wreath(w);
    return w;
}

json separation_report_to_json(const SeparationReport & r)
{
    json pairs = json::array();
    for (const auto & ev : r.pairs)
        pairs.push_back({{"lemma", witness_rule_token(ev.rule)},
                         {"witness_index", ev.witness_index},
                         {"support", ev.support},
                         {"member", ev.member}});
    return {{"window", r.window}, {"tau", r.tau.image}, {"pairs", pairs}, {"verified", r.verified}};
}

SeparateInput separate_input_from_json(const json & j)
{
    SeparateInput input;
    input.n = expect_int(j, "n");
    input.m = expect_int(j, "m");
    const json & pairs = expect(j, "pairs");
    if (!pairs.is_array())
        throw InvalidParameter("json: pairs is not an array");
    for (const auto & p : pairs)
        input.pairs.push_back(word_pair_from_json(p));
    return input;
}

std::string dump_stable(const json & j)
{
    return j.dump(2) + "\n";
}

json read_json_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot read '" + path + "'");
    json j;
    try {
        in >> j;
    }
    catch (const json::exception & e) {
        throw InvalidParameter("json: parse failure in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string & path, const json & j)
{
    std::ofstream out(path);
    if (!out)
        throw std::ios_base::failure("cannot write '" + path + "'");
    out << dump_stable(j);
    if (!out)
        throw std::ios_base::failure("write to '" + path + "' failed");
}

}
