#include "ccauto/report.hpp"

#include <json.hpp>

#include <sstream>

namespace ccauto {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json group_json(const GroupReport& r) {
    ordered_json j;
    j["group"] = r.name;
    j["order"] = r.order;
    j["abelian"] = r.abelian;
    j["center_order"] = r.center_order;
    j["class"] = r.nilpotency_class;
    j["gamma2_order"] = r.gamma2_order;
    j["z2_order"] = r.z2_order;
    ordered_json fired = ordered_json::array();
    for (const CriterionResult& c : r.criteria)
        if (c.fired)
            fired.push_back(criterion_token(c.criterion));
    j["criteria_fired"] = std::move(fired);
    j["classification"] = r.classification;
    j["outc_order"] = r.outc_order;
    if (r.cent_count)
        j["cent_count"] = *r.cent_count;
    else
        j["cent_count"] = nullptr;
    if (r.lemma26_bound)
        j["lemma26_bound"] = *r.lemma26_bound;
    else
        j["lemma26_bound"] = nullptr;
    return j;
}

std::string fired_list(const GroupReport& r) {
    std::string out;
    for (const CriterionResult& c : r.criteria)
        if (c.fired) {
            if (!out.empty())
                out += ',';
            out += criterion_token(c.criterion);
        }
    if (out.empty())
        out = "-";
    return out;
}

std::string csv_row(const GroupReport& r) {
    std::ostringstream os;
    os << r.name << ',' << r.order << ',' << (r.abelian ? "true" : "false") << ','
       << r.center_order << ',' << r.nilpotency_class << ',' << r.gamma2_order << ','
       << r.z2_order << ',';
    std::string fired;
    for (const CriterionResult& c : r.criteria)
        if (c.fired) {
            if (!fired.empty())
                fired += ';';
            fired += criterion_token(c.criterion);
        }
    os << fired << ',' << r.classification << ',' << r.outc_order << ',';
    if (r.cent_count)
        os << *r.cent_count;
    os << ',';
    if (r.lemma26_bound)
        os << *r.lemma26_bound;
    return os.str();
}

constexpr const char* kCsvHeader =
    "group,order,abelian,center_order,class,gamma2_order,z2_order,criteria_fired,"
    "classification,outc_order,cent_count,lemma26_bound";

std::string text_table(const std::vector<GroupReport>& groups) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"group", "order", "|Z|", "class", "|g2|", "|Z2|", "fired", "classification",
                    "Out_c", "Cent", "L26"});
    for (const GroupReport& r : groups) {
        rows.push_back({r.name, std::to_string(r.order), std::to_string(r.center_order),
                        std::to_string(r.nilpotency_class), std::to_string(r.gamma2_order),
                        std::to_string(r.z2_order), fired_list(r), r.classification,
                        std::to_string(r.outc_order),
                        r.cent_count ? std::to_string(*r.cent_count) : "-",
                        r.lemma26_bound ? std::to_string(*r.lemma26_bound) : "-"});
    }
    std::vector<size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size())
                out += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::string render_catalog_report(const CatalogReport& rep, ReportFormat format) {
    switch (format) {
    case ReportFormat::Json: {
        ordered_json arr = ordered_json::array();
        for (const GroupReport& r : rep.groups)
            arr.push_back(group_json(r));
        return arr.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
        std::string out = std::string(kCsvHeader) + "\n";
        for (const GroupReport& r : rep.groups)
            out += csv_row(r) + "\n";
        return out;
    }
    case ReportFormat::Text: {
        std::string out = text_table(rep.groups);
        int abelian = 0;
        for (const GroupReport& r : rep.groups)
            abelian += r.abelian ? 1 : 0;
        out += "\ngroups: " + std::to_string(rep.groups.size()) +
               ", abelian: " + std::to_string(abelian) + "\n";
        out += "exceptional (Out_c != 1):";
        if (rep.exceptional_groups.empty())
            out += " none";
        for (const std::string& name : rep.exceptional_groups)
            out += " " + name;
        out += "\n";
        for (const std::string& f : rep.failures)
            out += "mismatch: " + f + "\n";
        out += std::string("verdict: ") + (rep.pass ? "PASS" : "FAIL") + "\n";
        return out;
    }
    }
    return {};
}

std::string render_group_report(const GroupReport& rep, ReportFormat format) {
    switch (format) {
    case ReportFormat::Json:
        return group_json(rep).dump(2) + "\n";
    case ReportFormat::Csv:
        return std::string(kCsvHeader) + "\n" + csv_row(rep) + "\n";
    case ReportFormat::Text: {
        std::ostringstream os;
        os << "group " << rep.name << "\n"
           << "order " << rep.order << "\n"
           << "abelian " << (rep.abelian ? "yes" : "no") << "\n"
           << "center order " << rep.center_order << "\n"
           << "nilpotency class " << rep.nilpotency_class << "\n"
           << "derived subgroup order " << rep.gamma2_order << "\n"
           << "second center order " << rep.z2_order << "\n"
           << "criteria fired " << fired_list(rep) << "\n"
           << "classification " << rep.classification << "\n"
           << "Inn " << rep.inn_order << "\n"
           << "Aut_c " << rep.autc_order << "\n"
           << "Out_c " << rep.outc_order << "\n";
        os << "central automorphisms ";
        if (rep.cent_count)
            os << *rep.cent_count;
        else
            os << "-";
        os << "\n";
        os << "lower bound ";
        if (rep.lemma26_bound)
            os << *rep.lemma26_bound;
        else
            os << "-";
        os << "\n";
        return os.str();
    }
    }
    return {};
}

std::string render_criteria_lines(const GroupReport& rep) {
    std::string out;
    for (const CriterionResult& c : rep.criteria) {
        out += criterion_token(c.criterion);
        out += c.fired ? ": fired" : ": not fired";
        if (c.fired && c.witness && !c.witness->description.empty())
            out += " (" + c.witness->description + ")";
        out += "\n";
    }
    out += "lemma26_bound: ";
    out += rep.lemma26_bound ? std::to_string(*rep.lemma26_bound) : "absent";
    out += "\n";
    return out;
}

} // namespace ccauto
