#include "framehs/report.hpp"

#include "framehs/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace framehs {

RunReport::RunReport(std::string command) : command_(std::move(command)) {}

void RunReport::input(const std::string& key, const std::string& value) {
    inputs_[key] = value;
}

void RunReport::output(const std::string& key, const std::string& path) {
    outputs_[key] = path;
}

void RunReport::metric(const std::string& key, double value) {
    metrics_[key] = value;
}

void RunReport::metric(const std::string& key, cplx value) {
    metrics_[key] = {{"re", value.real()}, {"im", value.imag()}};
}

void RunReport::metric(const std::string& key, std::uint64_t value) {
    metrics_[key] = value;
}

void RunReport::metric(const std::string& key, bool value) {
    metrics_[key] = value;
}

void RunReport::metric(const std::string& key, const std::string& value) {
    metrics_[key] = value;
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["inputs"] = inputs_;
    j["outputs"] = outputs_;
    j["metrics"] = metrics_;
    j["wall_time_ms"] = wall_time_ms_;
    return j;
}

void RunReport::write_json(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << to_json().dump(2) << '\n';
}

void RunReport::print(std::ostream& out) const {
    for (const auto& [key, value] : metrics_.items()) {
        out << key << ": ";
        if (value.is_number_float()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.12g", value.get<double>());
            out << buf;
        } else if (value.is_object() && value.contains("re")) {
            out << csv::format_scalar({value["re"].get<double>(), value["im"].get<double>()});
        } else if (value.is_string()) {
            out << value.get<std::string>();
        } else {
            out << value.dump();
        }
        out << '\n';
    }
}

} // namespace framehs
