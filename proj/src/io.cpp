#include "leonard/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace leonard {

namespace {

using nlohmann::json;

std::vector<std::string> string_array(const json& j, const std::string& key,
                                      std::size_t expected) {
    if (!j.contains(key)) throw ParseError("missing key '" + key + "'");
    const json& a = j.at(key);
    if (!a.is_array()) throw ParseError("'" + key + "' must be an array");
    if (a.size() != expected)
        throw ParseError("'" + key + "' must have length " + std::to_string(expected) + ", got " +
                         std::to_string(a.size()));
    std::vector<std::string> out;
    for (const auto& x : a) {
        if (x.is_string()) out.push_back(x.get<std::string>());
        else if (x.is_number_integer()) out.push_back(std::to_string(x.get<long long>()));
        else throw ParseError("'" + key + "' entries must be scalar strings");
    }
    return out;
}

} // namespace

ParameterArrayFile parse_parameter_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (!j.contains("d")) throw ParseError("missing key 'd'");
    if (!j.at("d").is_number_integer() || j.at("d").get<long long>() < 0)
        throw ParseError("'d' must be a nonnegative integer");

    ParameterArrayFile out;
    out.d = j.at("d").get<std::size_t>();

    if (!j.contains("field")) throw ParseError("missing key 'field'");
    const json& fj = j.at("field");
    if (fj.is_string() && fj.get<std::string>() == "rational") {
        out.field = FieldSpec::rationals();
    } else if (fj.is_object() && fj.contains("prime")) {
        if (!fj.at("prime").is_number_integer() || fj.at("prime").get<long long>() < 2)
            throw ParseError("'field.prime' must be an integer >= 2");
        try {
            out.field = FieldSpec::prime_field(fj.at("prime").get<std::uint64_t>());
        } catch (const Error& e) {
            throw ParseError(e.what()); // non-prime modulus is a file error
        }
    } else {
        throw ParseError("'field' must be \"rational\" or {\"prime\": p}");
    }

    out.theta = string_array(j, "theta", out.d + 1);
    out.theta_star = string_array(j, "theta_star", out.d + 1);
    out.varphi = string_array(j, "varphi", out.d);
    if (j.contains("phi") && !j.at("phi").is_null())
        out.phi = string_array(j, "phi", out.d);
    return out;
}

ParameterArrayFile load_parameter_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_parameter_json(buf.str());
}

std::pair<LeonardSystem, ParameterArray> build_from_file(const ParameterArrayFile& file) {
    auto parse_all = [&](const std::vector<std::string>& texts) {
        std::vector<FieldElement> out;
        for (const auto& t : texts) out.push_back(parse_element(t, file.field));
        return out;
    };
    std::vector<FieldElement> theta = parse_all(file.theta);
    std::vector<FieldElement> theta_star = parse_all(file.theta_star);
    std::vector<FieldElement> varphi = parse_all(file.varphi);

    auto [sys, pa] = from_split_form(std::move(theta), std::move(theta_star), std::move(varphi));
    if (file.phi) {
        std::vector<FieldElement> phi = parse_all(*file.phi);
        if (phi != pa.phi())
            throw Error("supplied phi does not match the second split sequence of the system");
    }
    return {std::move(sys), std::move(pa)};
}

ParameterArrayFile to_parameter_file(const ParameterArray& pa) {
    ParameterArrayFile out;
    out.d = pa.d();
    out.field = pa.field();
    for (const auto& x : pa.theta()) out.theta.push_back(format_element(x));
    for (const auto& x : pa.theta_star()) out.theta_star.push_back(format_element(x));
    for (const auto& x : pa.varphi()) out.varphi.push_back(format_element(x));
    std::vector<std::string> phi;
    for (const auto& x : pa.phi()) phi.push_back(format_element(x));
    out.phi = std::move(phi);
    return out;
}

std::string parameter_file_to_json(const ParameterArrayFile& file) {
    json j;
    j["d"] = file.d;
    if (file.field.is_rational()) j["field"] = "rational";
    else j["field"] = json{{"prime", file.field.modulus()}};
    j["theta"] = file.theta;
    j["theta_star"] = file.theta_star;
    j["varphi"] = file.varphi;
    if (file.phi) j["phi"] = *file.phi;
    return j.dump(2);
}

std::string report_to_json(const VerificationReport& rep) {
    json j;
    j["schema_version"] = 1;
    j["instance"] = rep.instance;
    j["all_pass"] = rep.all_pass();
    j["seconds"] = rep.total_seconds;
    json suites = json::array();
    for (const auto& s : rep.suites) {
        json sj;
        sj["name"] = s.name;
        sj["pass"] = s.pass;
        sj["checks"] = s.checks;
        sj["failures"] = s.failures;
        sj["failed_ids"] = s.failed_ids;
        if (!s.note.empty()) sj["note"] = s.note;
        sj["seconds"] = s.seconds;
        suites.push_back(std::move(sj));
    }
    j["suites"] = std::move(suites);
    return j.dump(2);
}

} // namespace leonard
