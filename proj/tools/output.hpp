// output.hpp
//
// Record emission for the command-line tool. Two formats:
//  - json: one object per line, keys kept in insertion order
//  - csv: header row from the first record's keys, then one row per record;
//    summary blocks become '#' comment lines so the table stays rectangular
// All numbers pass through the same shortest-round-trip serializer, so json
// and csv carry byte-identical digits and reruns are byte-identical files.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace flcli {

using ordered_json = nlohmann::ordered_json;

class RecordWriter {
  public:
    RecordWriter(std::string format, std::ostream& os);

    void record(const ordered_json& obj);
    void summary(const ordered_json& obj);

  private:
    std::string cell(const ordered_json& v) const;

    std::string format_;
    std::ostream& os_;
    bool header_done_ = false;
    std::vector<std::string> header_;
};

}  // namespace flcli
