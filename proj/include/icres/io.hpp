#ifndef ICRES_IO_HPP
#define ICRES_IO_HPP

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "clutter.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace icres {

/// A clutter file: JSON {"name": ..., "vertices": s, "edges": [[1,3],...]} or plain text.
struct ClutterDocument
{
    std::optional<std::string> name;
    Clutter clutter;
};

namespace detail {

inline ClutterDocument parse_json_document(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw Error(ErrorKind::ParseError, "top level must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_number_integer() || doc["vertices"].get<long long>() < 1)
        throw Error(ErrorKind::ParseError, "\"vertices\" must be a positive integer");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw Error(ErrorKind::ParseError, "\"edges\" must be an array of vertex lists");
    std::vector<std::vector<long long>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array())
            throw Error(ErrorKind::ParseError, "edge " + e.dump() + " is not a list");
        std::vector<long long> labels;
        for (const auto& x : e) {
            if (!x.is_number_integer())
                throw Error(ErrorKind::ParseError, "edge " + e.dump() + " has a non-integer entry");
            labels.push_back(x.get<long long>());
        }
        edges.push_back(std::move(labels));
    }
    std::optional<std::string> name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw Error(ErrorKind::ParseError, "\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    return {name, Clutter::from_labels(doc["vertices"].get<std::size_t>(), edges)};
}

/// First line s, then one edge per line as 1-based labels.  '#' starts a comment.
inline ClutterDocument parse_text_document(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::optional<std::size_t> s;
    std::vector<std::vector<long long>> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> values;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(token, &used);
                if (used != token.size())
                    throw std::invalid_argument(token);
                values.push_back(v);
            }
            catch (const std::logic_error&) {
                throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": '" + token
                            + "' is not an integer");
            }
        }
        if (values.empty())
            continue;
        if (!s) {
            if (values.size() != 1 || values[0] < 1)
                throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no)
                            + ": expected the vertex count");
            s = static_cast<std::size_t>(values[0]);
        }
        else
            edges.push_back(std::move(values));
    }
    if (!s)
        throw Error(ErrorKind::ParseError, "empty clutter file");
    return {std::nullopt, Clutter::from_labels(*s, edges)};
}

}   // namespace detail

/// JSON when the first non-blank character is '{', plain text otherwise.
inline ClutterDocument parse_clutter_document(const std::string& text)
{
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        if (ch == '{')
            return detail::parse_json_document(text);
        break;
    }
    return detail::parse_text_document(text);
}

inline ClutterDocument read_clutter_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_clutter_document(buf.str());
}

inline nlohmann::json edges_json(const Clutter& c)
{
    auto edges = nlohmann::json::array();
    for (const auto& e : c.edges()) {
        auto labels = nlohmann::json::array();
        for (auto i : e.indices())
            labels.push_back(i + 1);
        edges.push_back(std::move(labels));
    }
    return edges;
}

inline nlohmann::json to_json(const ClutterDocument& doc)
{
    nlohmann::json out = nlohmann::json::object();
    if (doc.name)
        out["name"] = *doc.name;
    out["vertices"] = doc.clutter.vertex_count();
    out["edges"] = edges_json(doc.clutter);
    return out;
}

/// Canonical form: keys sorted, edges in canonical order, one line.
inline std::string serialize(const ClutterDocument& doc)
{
    return to_json(doc).dump();
}

inline nlohmann::json to_json(const RationalVector& v)
{
    auto out = nlohmann::json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

inline nlohmann::json to_json(const IntVector& v)
{
    auto out = nlohmann::json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

}   // namespace icres

#endif
