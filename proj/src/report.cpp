#include "shelf/report.hpp"

#include "shelf/errors.hpp"

#include <sstream>

namespace shelf {

std::string config_comment(const Config& cfg) {
    std::string s = "#";
    for (const auto& [k, v] : cfg) {
        s += ' ';
        s += k;
        s += '=';
        s += v;
    }
    return s;
}

ojson config_json(const Config& cfg) {
    ojson o = ojson::object();
    for (const auto& [k, v] : cfg) o[k] = v;
    return o;
}

ojson value_json(const Rat& q, int digits) {
    return ojson{{"decimal", decimal_string(q, digits)}, {"ratio", rational_string(q)}};
}

std::string value_text(const Rat& q, const RenderOptions& opt) {
    return opt.exact ? rational_string(q) : decimal_string(q, opt.digits);
}

namespace {

ojson report_head(const char* kind, const Config& cfg) {
    ojson o = ojson::object();
    o["schema_version"] = kSchemaVersion;
    o["kind"] = kind;
    o["config"] = config_json(cfg);
    return o;
}

ojson distance_row(const DistanceReport& rep, const RenderOptions& opt) {
    ojson o = ojson::object();
    o["m"] = rep.m;
    o["tv"] = value_json(rep.tv, opt.digits);
    o["sep"] = value_json(rep.sep, opt.digits);
    o["linf"] = value_json(rep.linf, opt.digits);
    o["sep_class"] = rep.sep_class;
    o["linf_class"] = rep.linf_class;
    return o;
}

// the l-infinity column can be astronomically large for few shelves
std::string linf_note(const Rat& linf) {
    return linf > 10000 ? "  (>>1; effectively infinite)" : "";
}

} // namespace

ojson distance_report_json(const DistanceReport& rep, const Config& cfg,
                           const RenderOptions& opt) {
    ojson o = report_head("distance_report", cfg);
    o["n"] = rep.n;
    ojson row = distance_row(rep, opt);
    for (auto& [k, v] : row.items()) o[k] = v;
    return o;
}

ojson distance_table_json(const std::vector<DistanceReport>& rows, const Config& cfg,
                          const RenderOptions& opt) {
    ojson o = report_head("distance_table", cfg);
    o["n"] = rows.empty() ? 0 : rows.front().n;
    ojson arr = ojson::array();
    for (const auto& r : rows) arr.push_back(distance_row(r, opt));
    o["rows"] = arr;
    return o;
}

std::string distance_table_csv(const std::vector<DistanceReport>& rows,
                               const Config& cfg, const RenderOptions& opt) {
    std::string s = config_comment(cfg) + "\n";
    s += "m,tv,sep,linf\n";
    for (const auto& r : rows) {
        s += std::to_string(r.m) + "," + value_text(r.tv, opt) + "," +
             value_text(r.sep, opt) + "," + value_text(r.linf, opt) + "\n";
    }
    return s;
}

std::string distance_table_text(const std::vector<DistanceReport>& rows,
                                const Config& cfg, const RenderOptions& opt) {
    std::string s = config_comment(cfg) + "\n";
    for (const auto& r : rows) {
        s += "m=" + std::to_string(r.m) + "  tv=" + value_text(r.tv, opt) +
             "  sep=" + value_text(r.sep, opt) + "  linf=" + value_text(r.linf, opt) +
             linf_note(r.linf) + "\n";
    }
    return s;
}

namespace {

ojson histogram_json(const std::map<long, std::uint64_t>& hist) {
    ojson o = ojson::object();
    for (const auto& [k, v] : hist) o[std::to_string(k)] = v;
    return o;
}

} // namespace

ojson mc_report_json(const McReport& rep, const Config& cfg, const RenderOptions& opt) {
    ojson o = report_head("mc_report", cfg);
    o["statistic"] = rep.statistic;
    o["n"] = rep.n;
    o["m"] = rep.m;
    o["trials"] = rep.trials;
    o["seed"] = rep.seed;
    o["generator"] = rep.generator;
    o["mean"] = value_json(rep.mean, opt.digits);
    o["variance"] = value_json(rep.variance, opt.digits);
    o["std_error"] = rep.std_error;
    o["histogram"] = histogram_json(rep.histogram);
    if (!rep.extras.empty()) {
        ojson e = ojson::object();
        for (const auto& [k, v] : rep.extras) e[k] = value_json(v, opt.digits);
        o["extras"] = e;
    }
    return o;
}

std::string mc_report_csv(const McReport& rep, const Config& cfg,
                          const RenderOptions& opt) {
    std::string s = config_comment(cfg) + "\n";
    s += "# statistic=" + rep.statistic + " mean=" + value_text(rep.mean, opt) +
         " variance=" + value_text(rep.variance, opt) +
         " std_error=" + std::to_string(rep.std_error) + "\n";
    s += "value,count\n";
    for (const auto& [k, v] : rep.histogram)
        s += std::to_string(k) + "," + std::to_string(v) + "\n";
    return s;
}

std::string mc_report_text(const McReport& rep, const Config& cfg,
                           const RenderOptions& opt) {
    std::ostringstream os;
    os << config_comment(cfg) << "\n";
    os << rep.statistic << ": trials=" << rep.trials << " seed=" << rep.seed
       << " generator=" << rep.generator << "\n";
    os << "  mean=" << value_text(rep.mean, opt)
       << "  variance=" << value_text(rep.variance, opt)
       << "  std_error=" << decimal_string(Rat(rep.std_error), 6) << "\n";
    for (const auto& [k, v] : rep.extras)
        os << "  " << k << "=" << value_text(v, opt) << "\n";
    return os.str();
}

ojson discrete_dist_json(const DiscreteDist& dist, const Config& cfg,
                         const RenderOptions& opt) {
    ojson o = report_head("discrete_dist", cfg);
    o["statistic"] = dist.statistic();
    o["n"] = dist.n();
    o["m"] = dist.m();
    ojson support = ojson::array();
    ojson probs = ojson::array();
    for (const auto& e : dist.entries()) {
        support.push_back(e.label);
        probs.push_back(value_json(e.prob, opt.digits));
    }
    o["support"] = support;
    o["probs"] = probs;
    o["total"] = value_json(dist.total(), opt.digits);
    o["tail"] = value_json(dist.tail(), opt.digits);
    return o;
}

std::string discrete_dist_csv(const DiscreteDist& dist, const Config& cfg,
                              const RenderOptions& opt) {
    std::string s = config_comment(cfg) + "\n";
    s += "value,prob\n";
    for (const auto& e : dist.entries()) {
        const bool quote = e.label.find(',') != std::string::npos;
        s += quote ? "\"" + e.label + "\"" : e.label;
        s += "," + value_text(e.prob, opt) + "\n";
    }
    return s;
}

std::string discrete_dist_text(const DiscreteDist& dist, const Config& cfg,
                               const RenderOptions& opt) {
    std::string s = config_comment(cfg) + "\n";
    s += dist.statistic() + ":\n";
    for (const auto& e : dist.entries())
        s += "  " + e.label + "  " + value_text(e.prob, opt) + "\n";
    if (dist.tail() != 0) s += "  tail  " + value_text(dist.tail(), opt) + "\n";
    return s;
}

ojson perm_dist_json(const PermDist& dist, const std::string& label, const Config& cfg,
                     const RenderOptions& opt) {
    ojson o = report_head("perm_dist", cfg);
    o["label"] = label;
    o["n"] = dist.empty() ? 0 : dist.begin()->first.size();
    ojson support = ojson::array();
    ojson probs = ojson::array();
    for (const auto& [w, p] : dist) {
        support.push_back(w.to_string());
        probs.push_back(value_json(p, opt.digits));
    }
    o["support"] = support;
    o["probs"] = probs;
    return o;
}

std::string perm_dist_csv(const PermDist& dist, const Config& cfg,
                          const RenderOptions& opt) {
    std::string s = config_comment(cfg) + "\n";
    s += "perm,prob\n";
    for (const auto& [w, p] : dist)
        s += "\"" + w.to_string() + "\"," + value_text(p, opt) + "\n";
    return s;
}

namespace {

bool type_matches(const ojson& v, const std::string& type) {
    size_t bar = type.find('|');
    if (bar != std::string::npos)
        return type_matches(v, type.substr(0, bar)) ||
               type_matches(v, type.substr(bar + 1));
    if (type == "string") return v.is_string();
    if (type == "number") return v.is_number();
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "boolean") return v.is_boolean();
    throw Error("schema: unknown type '" + type + "'");
}

} // namespace

std::string validate_report_json(const ojson& doc, const ojson& schema) {
    if (!doc.is_object()) throw Error("report: not an object");
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number())
        throw Error("report: missing schema_version");
    if (doc["schema_version"].get<int>() != schema.at("schema_version").get<int>())
        throw Error("report: schema_version mismatch");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw Error("report: missing kind");
    const std::string kind = doc["kind"].get<std::string>();
    const auto& kinds = schema.at("kinds");
    if (!kinds.contains(kind)) throw Error("report: unknown kind '" + kind + "'");
    for (const auto& [field, type] : kinds.at(kind).at("required").items()) {
        if (!doc.contains(field))
            throw Error("report kind '" + kind + "': missing field '" + field + "'");
        if (!type_matches(doc.at(field), type.get<std::string>()))
            throw Error("report kind '" + kind + "': field '" + field +
                        "' has wrong type");
    }
    return kind;
}

} // namespace shelf
