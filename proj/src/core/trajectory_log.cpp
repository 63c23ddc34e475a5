#include "ast/core/trajectory_log.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ast/util/encoding.hpp"

namespace ast {

namespace {

constexpr const char* kFormatTag = "# ast-trajectory-log v1";
constexpr const char* kFieldList =
    "fields=run_id,t,state_blob,action,reward,action_log_likelihood,event,terminal";

double parse_double(const std::string& text, int line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error("trajectory log: bad numeric field at line " +
                                 std::to_string(line_no));
    }
    return value;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

} // namespace

std::string encode_action(const EnvironmentAction& action) {
    if (action.is_seed()) {
        return "s:" + std::to_string(action.seed_value());
    }
    std::string out = "c:";
    const auto& values = action.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += format_double(values[i]);
    }
    return out;
}

EnvironmentAction decode_action(const std::string& text) {
    if (text.size() < 2 || text[1] != ':') {
        throw std::invalid_argument("action encoding: missing type prefix");
    }
    const std::string body = text.substr(2);
    if (text[0] == 's') {
        std::uint64_t token = 0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), token);
        if (ec != std::errc() || ptr != body.data() + body.size()) {
            throw std::invalid_argument("action encoding: bad seed token");
        }
        return EnvironmentAction::seed(token);
    }
    if (text[0] != 'c') {
        throw std::invalid_argument("action encoding: unknown type prefix");
    }
    std::vector<double> values;
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            std::size_t pos = body.find(',', start);
            const std::string piece =
                pos == std::string::npos ? body.substr(start) : body.substr(start, pos - start);
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
            if (ec != std::errc() || ptr != piece.data() + piece.size()) {
                throw std::invalid_argument("action encoding: bad component");
            }
            values.push_back(v);
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
    }
    return EnvironmentAction::continuous(std::move(values));
}

void write_trajectory_log(std::ostream& out, const TrajectoryLogHeader& header,
                          const std::string& run_id, const Trajectory& trajectory) {
    out << kFormatTag << ' ' << kFieldList << " config_hash=" << header.config_hash
        << " scenario=" << header.scenario << '\n';
    int t = 0;
    for (const auto& step : trajectory.steps) {
        ++t;
        out << run_id << '\t' << t << '\t' << base64_encode(step.state_blob) << '\t'
            << encode_action(step.action) << '\t' << format_double(step.reward) << '\t'
            << format_double(step.action_log_likelihood) << '\t' << (step.event ? 1 : 0) << '\t'
            << (step.terminal ? 1 : 0) << '\n';
    }
}

TrajectoryLog read_trajectory_log(std::istream& in) {
    TrajectoryLog log;
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) {
        throw std::runtime_error("trajectory log: empty input");
    }
    ++line_no;
    if (line.rfind(kFormatTag, 0) != 0) {
        throw std::runtime_error("trajectory log: unrecognized header");
    }
    std::istringstream header_stream(line);
    std::string word;
    while (header_stream >> word) {
        if (word.rfind("config_hash=", 0) == 0) log.header.config_hash = word.substr(12);
        if (word.rfind("scenario=", 0) == 0) log.header.scenario = word.substr(9);
    }

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 8) {
            throw std::runtime_error("trajectory log: expected 8 fields at line " +
                                     std::to_string(line_no));
        }
        TrajectoryLogRecord record;
        record.run_id = fields[0];
        record.t = static_cast<int>(parse_double(fields[1], line_no));
        try {
            record.state_blob = base64_decode(fields[2]);
            record.action = decode_action(fields[3]);
        } catch (const std::invalid_argument& err) {
            throw std::runtime_error("trajectory log: " + std::string(err.what()) + " at line " +
                                     std::to_string(line_no));
        }
        record.reward = parse_double(fields[4], line_no);
        record.action_log_likelihood = parse_double(fields[5], line_no);
        record.event = fields[6] == "1";
        record.terminal = fields[7] == "1";
        if ((fields[6] != "0" && fields[6] != "1") || (fields[7] != "0" && fields[7] != "1")) {
            throw std::runtime_error("trajectory log: bad flag at line " + std::to_string(line_no));
        }
        log.records.push_back(std::move(record));
    }
    return log;
}

} // namespace ast
