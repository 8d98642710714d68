// json_io.hpp -- the presentation input schema and JSON output forms used by
// the command-line tool.

#ifndef HHCI_JSON_IO_HPP
#define HHCI_JSON_IO_HPP

#include <json.hpp>

#include "hhci/cliffdg.hpp"

namespace hhci {

using Json = nlohmann::ordered_json;

// {"ring": "Q"|"Z"|"Z/<n>"|"GF(<p>)", "vars": [...], "relations": ["...", ...],
//  "assume_regular": bool (optional)}
Presentation presentation_from_json(const Json& j);
Presentation load_presentation(const std::string& path);

Json to_json(const ModuleInvariants& inv);
Json graded_to_json(const GradedModule& gm, int max_degree);
Json hodge_to_json(const HodgeTable& table);

}  // namespace hhci

#endif
