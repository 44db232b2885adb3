#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "lzb/cli.hpp"

namespace lzb::cli {

void RunConfig::validate() const {
    if (trunc <= 0 || K <= 0 || max_rank <= 0 || jobs <= 0)
        throw std::invalid_argument("trunc, K, max_rank and jobs must be positive");
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw std::invalid_argument("format must be json, csv or text");
}

std::string format_name(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "json";
}

RunConfig load_config(const std::optional<std::string>& env_path) {
    RunConfig c;
    if (!env_path || env_path->empty()) return c;
    std::ifstream in(*env_path);
    if (!in) throw std::invalid_argument("cannot open config file " + *env_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed config file: " + std::string(e.what()));
    }
    if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    try {
        if (j.contains("trunc")) c.trunc = j.at("trunc").get<int>();
        if (j.contains("K")) c.K = j.at("K").get<int>();
        if (j.contains("max_rank")) c.max_rank = j.at("max_rank").get<int>();
        if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
        if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
        if (j.contains("output")) c.output = j.at("output").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("bad config value: " + std::string(e.what()));
    }
    c.validate();
    return c;
}

}  // namespace lzb::cli
