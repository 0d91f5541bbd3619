#include "output.hpp"

#include <utility>

#include "fluxring/errors.hpp"

namespace flcli {

RecordWriter::RecordWriter(std::string format, std::ostream& os)
    : format_(std::move(format)), os_(os) {
    if (format_ != "json" && format_ != "csv")
        throw fluxring::InvalidArgument("format must be json or csv");
}

std::string RecordWriter::cell(const ordered_json& v) const {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();  // numbers and booleans, shortest round-trip text
}

void RecordWriter::record(const ordered_json& obj) {
    if (format_ == "json") {
        os_ << obj.dump() << '\n';
        return;
    }
    if (!header_done_) {
        bool first = true;
        for (const auto& item : obj.items()) {
            header_.push_back(item.key());
            os_ << (first ? "" : ",") << item.key();
            first = false;
        }
        os_ << '\n';
        header_done_ = true;
    }
    bool first = true;
    for (const auto& key : header_) {
        os_ << (first ? "" : ",")
            << cell(obj.contains(key) ? obj.at(key) : ordered_json());
        first = false;
    }
    os_ << '\n';
}

void RecordWriter::summary(const ordered_json& obj) {
    if (format_ == "json") {
        os_ << obj.dump() << '\n';
        return;
    }
    for (const auto& item : obj.items())
        os_ << "# " << item.key() << "=" << cell(item.value()) << '\n';
}

}  // namespace flcli
