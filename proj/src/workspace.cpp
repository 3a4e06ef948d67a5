#include "reylie/workspace.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace reylie::io {

const std::vector<std::string> &known_kinds() {
    static const std::vector<std::string> k{"lie_algebra", "reynolds_lie_algebra", "pair",
                                            "rep",         "cochain",              "truncation",
                                            "extension",   "central_extension",    "obstruction"};
    return k;
}

namespace {

bool known(const std::string &kind) {
    const auto &k = known_kinds();
    return std::find(k.begin(), k.end(), kind) != k.end();
}

// reference field -> kinds it may name
const std::map<std::string, std::vector<std::string>> &reference_kinds() {
    static const std::map<std::string, std::vector<std::string>> r{
        {"algebra", {"lie_algebra"}},
        {"pair", {"pair"}},
        {"rep", {"rep"}},
        {"base", {"reynolds_lie_algebra", "pair"}},
        {"extension", {"central_extension"}},
    };
    return r;
}

struct Envelope {
    std::string kind;
    json payload;
};

Envelope envelope(const json &doc, const std::string &where) {
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("payload"))
        throw InputError(where, "expected an envelope {\"kind\": ..., \"payload\": ...}");
    if (!doc["kind"].is_string())
        throw InputError(where + "/kind", "expected a string");
    return {doc["kind"].get<std::string>(), doc["payload"]};
}

class Resolver {
  public:
    Resolver(const std::map<std::string, Envelope> &raw) : raw_(raw) {}

    json resolve(const std::string &name, const std::string &where) {
        if (auto it = done_.find(name); it != done_.end())
            return it->second;
        if (!active_.insert(name).second)
            throw InputError(where, "cyclic reference through \"" + name + "\"");
        json out = walk(raw_.at(name).payload, "/items/" + name + "/payload");
        active_.erase(name);
        done_[name] = out;
        return out;
    }

  private:
    json walk(const json &j, const std::string &where) {
        if (!j.is_object() && !j.is_array())
            return j;
        json out = j;
        if (j.is_array()) {
            for (std::size_t i = 0; i < j.size(); ++i)
                out[i] = walk(j[i], where + "/" + std::to_string(i));
            return out;
        }
        for (auto &[key, val] : out.items()) {
            const std::string w = where + "/" + key;
            auto ref = reference_kinds().find(key);
            if (ref != reference_kinds().end() && val.is_string()) {
                const std::string target = val.get<std::string>();
                auto it = raw_.find(target);
                if (it == raw_.end())
                    throw InputError(w, "unresolved reference \"" + target + "\"");
                const auto &allowed = ref->second;
                if (std::find(allowed.begin(), allowed.end(), it->second.kind) == allowed.end())
                    throw InputError(w, "\"" + target + "\" is a " + it->second.kind + ", expected " + allowed[0]);
                val = resolve(target, w);
            } else {
                val = walk(val, w);
            }
        }
        return out;
    }

    const std::map<std::string, Envelope> &raw_;
    std::map<std::string, json> done_;
    std::set<std::string> active_;
};

} // namespace

Workspace Workspace::from_json(const json &doc, const std::string &default_name) {
    Envelope top = envelope(doc, "");
    std::vector<std::string> order;
    std::map<std::string, Envelope> raw;
    if (top.kind == "workspace") {
        if (!top.payload.is_object() || !top.payload.contains("items") || !top.payload["items"].is_object())
            throw InputError("/payload", "expected {\"items\": {name: envelope, ...}}");
        for (const auto &[name, env] : top.payload["items"].items()) {
            Envelope e = envelope(env, "/payload/items/" + name);
            if (!known(e.kind))
                throw InputError("/payload/items/" + name + "/kind", "unknown kind \"" + e.kind + "\"");
            order.push_back(name);
            raw.emplace(name, std::move(e));
        }
    } else {
        if (!known(top.kind))
            throw InputError("/kind", "unknown kind \"" + top.kind + "\"");
        std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                                            : default_name;
        order.push_back(name);
        raw.emplace(name, std::move(top));
    }
    Resolver res(raw);
    Workspace ws;
    for (const auto &name : order)
        ws.items_.push_back({name, raw.at(name).kind, res.resolve(name, "/items/" + name)});
    return ws;
}

Workspace Workspace::load_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw InputError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return from_json(parse(ss.str(), path), std::filesystem::path(path).stem().string());
    } catch (const InputError &e) {
        if (e.where().rfind(path, 0) == 0)
            throw;
        throw InputError(path + ":" + e.where(), e.message());
    }
}

const Item &Workspace::get(const std::string &name) const {
    for (const auto &it : items_)
        if (it.name == name)
            return it;
    throw InputError("", "no item named \"" + name + "\"");
}

const Item &Workspace::select(const std::vector<std::string> &kinds, const std::string &name) const {
    auto fits = [&](const Item &it) { return std::find(kinds.begin(), kinds.end(), it.kind) != kinds.end(); };
    if (!name.empty()) {
        const Item &it = get(name);
        if (!fits(it))
            throw InputError("", "item \"" + name + "\" is a " + it.kind + ", not usable here");
        return it;
    }
    for (const auto &it : items_)
        if (fits(it))
            return it;
    std::string list;
    for (const auto &k : kinds)
        list += (list.empty() ? "" : ", ") + k;
    throw InputError("", "no item of kind " + list);
}

} // namespace reylie::io
