#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable run reports.
 *
 * Deterministic JSON: insertion-ordered objects, floats printed with 17
 * significant digits (6 in the human tables), no locale dependence.  Identical
 * invocations produce byte-identical output.
 */

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace defcalc {

inline std::string format_double(double v, int significant = 17) {
    if (v != v) return "nan";
    if (v > 1e308 * 10.0) return "inf";
    if (v < -1e308 * 10.0) return "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

/// Minimal ordered JSON value (objects keep insertion order).
class Json {
public:
    Json() : type_(Type::null) {}

    static Json str(std::string s) {
        Json j;
        j.type_ = Type::string;
        j.scalar_ = std::move(s);
        return j;
    }
    static Json num(double v, int significant = 17) {
        Json j;
        j.type_ = Type::number;
        const std::string s = format_double(v, significant);
        // JSON has no inf/nan literals; fall back to strings for those
        if (s == "inf" || s == "-inf" || s == "nan") return str(s);
        j.scalar_ = s;
        return j;
    }
    static Json integer(long long v) {
        Json j;
        j.type_ = Type::number;
        j.scalar_ = std::to_string(v);
        return j;
    }
    static Json boolean(bool b) {
        Json j;
        j.type_ = Type::boolean;
        j.scalar_ = b ? "true" : "false";
        return j;
    }
    static Json array() {
        Json j;
        j.type_ = Type::array;
        return j;
    }
    static Json object() {
        Json j;
        j.type_ = Type::object;
        return j;
    }

    Json& push(Json v) {
        items_.emplace_back("", std::move(v));
        return *this;
    }
    Json& set(const std::string& key, Json v) {
        items_.emplace_back(key, std::move(v));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    enum class Type { null, boolean, number, string, array, object };

    static void escape(const std::string& s, std::string& out) {
        out += '"';
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out += buf;
                    } else {
                        out += c;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        switch (type_) {
            case Type::null: out += "null"; break;
            case Type::boolean:
            case Type::number: out += scalar_; break;
            case Type::string: escape(scalar_, out); break;
            case Type::array: {
                out += '[';
                for (std::size_t i = 0; i < items_.size(); ++i) {
                    if (i) out += ',';
                    items_[i].second.write(out);
                }
                out += ']';
                break;
            }
            case Type::object: {
                out += '{';
                for (std::size_t i = 0; i < items_.size(); ++i) {
                    if (i) out += ',';
                    escape(items_[i].first, out);
                    out += ':';
                    items_[i].second.write(out);
                }
                out += '}';
                break;
            }
        }
    }

    Type type_;
    std::string scalar_;
    std::vector<std::pair<std::string, Json>> items_;
};

struct CheckRow {
    std::string claim;
    std::string expected;
    std::string observed;
    double tolerance = 0.0;
    bool pass = false;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    Json results = Json::object();
    std::vector<CheckRow> checks;

    int exit_status() const {
        for (const auto& c : checks)
            if (!c.pass) return 1;
        return 0;
    }

    std::string to_json() const {
        Json root = Json::object();
        root.set("schema_version", Json::integer(1));
        root.set("command", Json::str(command));
        Json params = Json::object();
        for (const auto& [k, v] : parameters) params.set(k, Json::str(v));
        root.set("parameters", std::move(params));
        root.set("results", results);
        Json rows = Json::array();
        for (const auto& c : checks) {
            Json row = Json::object();
            row.set("claim", Json::str(c.claim));
            row.set("expected", Json::str(c.expected));
            row.set("observed", Json::str(c.observed));
            row.set("tolerance", Json::num(c.tolerance));
            row.set("pass", Json::boolean(c.pass));
            rows.push(std::move(row));
        }
        root.set("checks", std::move(rows));
        root.set("exit_status", Json::integer(exit_status()));
        return root.dump() + "\n";
    }

    std::string checks_table() const {
        std::size_t w_claim = 5, w_exp = 8, w_obs = 8;
        for (const auto& c : checks) {
            w_claim = std::max(w_claim, c.claim.size());
            w_exp = std::max(w_exp, c.expected.size());
            w_obs = std::max(w_obs, c.observed.size());
        }
        std::string out;
        auto pad = [](const std::string& s, std::size_t w) {
            return s + std::string(w - s.size(), ' ');
        };
        out += pad("claim", w_claim) + "  " + pad("expected", w_exp) + "  " +
               pad("observed", w_obs) + "  result\n";
        for (const auto& c : checks)
            out += pad(c.claim, w_claim) + "  " + pad(c.expected, w_exp) + "  " +
                   pad(c.observed, w_obs) + "  " + (c.pass ? "pass" : "FAIL") + "\n";
        return out;
    }
};

}  // namespace defcalc
