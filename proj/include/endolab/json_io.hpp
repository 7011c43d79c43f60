#pragma once

#include "endolab/finite_map.hpp"
#include "endolab/monoid.hpp"
#include "endolab/separation.hpp"
#include "endolab/structure.hpp"
#include "endolab/wreath.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace endolab {

// Serialisation keeps keys alphabetical (nlohmann's default object ordering)
// and tuples sorted, so identical values produce identical bytes.

nlohmann::json structure_to_json(const Structure & s);
Structure structure_from_json(const nlohmann::json & j);

nlohmann::json finite_map_to_json(const FiniteMap & f);
FiniteMap finite_map_from_json(const nlohmann::json & j);

nlohmann::json word_to_json(const Word & w);
Word word_from_json(const nlohmann::json & j);

nlohmann::json word_pair_to_json(const WordPair & p);
WordPair word_pair_from_json(const nlohmann::json & j);

nlohmann::json wreath_to_json(const WreathElement & w);
WreathElement wreath_from_json(const nlohmann::json & j);

nlohmann::json separation_report_to_json(const SeparationReport & r);

// input format of the separate subcommand: the ambient parameters plus the
// basic-set data
struct SeparateInput {
    int n = 0;
    int m = 0;
    std::vector<WordPair> pairs;
};

SeparateInput separate_input_from_json(const nlohmann::json & j);

std::string dump_stable(const nlohmann::json & j);

nlohmann::json read_json_file(const std::string & path);
void write_json_file(const std::string & path, const nlohmann::json & j);

}
