#ifndef WDUAL_FIXTURES_HPP
#define WDUAL_FIXTURES_HPP

#include <string>
#include <vector>

namespace wdual {

// Canned reproductions of the published example computations, with every
// expected value embedded.  Each check appends one line; a fixture passes
// when no line starts with "MISMATCH".
struct FixtureResult {
    std::string id;
    bool ok = true;
    std::vector<std::string> lines;
};

const std::vector<std::string>& fixture_ids();
FixtureResult run_fixture(const std::string& id);

}  // namespace wdual

#endif
