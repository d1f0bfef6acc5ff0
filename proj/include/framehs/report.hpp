#pragma once

#include "framehs/linalg.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace framehs {

// Record of one CLI invocation. Keys keep insertion order, so serialization
// is deterministic for a fixed command path.
class RunReport {
  public:
    explicit RunReport(std::string command);

    void input(const std::string& key, const std::string& value);
    void output(const std::string& key, const std::string& path);
    void metric(const std::string& key, double value);
    void metric(const std::string& key, cplx value);
    void metric(const std::string& key, std::uint64_t value);
    void metric(const std::string& key, bool value);
    void metric(const std::string& key, const std::string& value);
    void set_wall_time_ms(double ms) { wall_time_ms_ = ms; }

    const std::string& command() const noexcept { return command_; }
    const nlohmann::ordered_json& metrics() const noexcept { return metrics_; }

    nlohmann::ordered_json to_json() const;
    void write_json(const std::string& path) const;
    // Human-readable "key: value" lines for the metrics.
    void print(std::ostream& out) const;

  private:
    std::string command_;
    nlohmann::ordered_json inputs_ = nlohmann::ordered_json::object();
    nlohmann::ordered_json outputs_ = nlohmann::ordered_json::object();
    nlohmann::ordered_json metrics_ = nlohmann::ordered_json::object();
    double wall_time_ms_ = 0.0;
};

} // namespace framehs
