#ifndef WDUAL_JSON_IO_HPP
#define WDUAL_JSON_IO_HPP

#include <json.hpp>
#include <optional>

#include "wdual/chaingap.hpp"
#include "wdual/codes.hpp"
#include "wdual/matrixgap.hpp"
#include "wdual/verdict.hpp"

namespace wdual {

using json = nlohmann::ordered_json;

json weight_to_json(const WeightTable& w);
WeightTable weight_from_json(const json& j);

json enumerator_to_json(const PartitionEnumerator& e);
PartitionEnumerator enumerator_from_json(const json& j);

json wwe_to_json(const WWEnumerator& e);

json code_to_json(const ChainCode& c);
json code_to_json(const MatrixCode& c);

// parses either family; exactly one of the optionals is set
struct ParsedCode {
    std::optional<ChainCode> chain;
    std::optional<MatrixCode> matrix;
};
ParsedCode code_from_json(const json& j, SubspaceOrdering ord = SubspaceOrdering::Lex);

json verdict_to_json(const Verdict& v);

json chain_pair_to_json(const ChainPair& p);
json swap_pair_to_json(const SwapPair& p);
json degenerate_pair_to_json(const DegeneratePair& p);

}  // namespace wdual

#endif
