#pragma once

#include <json.hpp>

#include "rsym/green.hpp"

namespace rsym {

using Json = nlohmann::ordered_json;

// rationals: JSON number when an integer fitting 53 bits, else "a/b" string
Json rat_json(const Rat& q);
Json cyclo_json(const Cyclo& c);
Json unipoly_json(const UniPoly& p);
Json ratfun_json(const RatFun& f);
Json multipoly_json(const MultiPoly& p);
Json multiratfun_json(const MultiRatFun& f);
Json partition_json(const Partition& p);
Json multipartition_json(const MultiPartition& mp);
Json symbol_json(const Symbol& s);
Json table_json(const SymbolTable& t);

std::vector<std::string> table_labels(const SymbolTable& t);

Json matrix_json(const Mat<RatFun>& m, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels);
Json matrix_json(const Mat<MultiRatFun>& m, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels);
Json matrix_json(const Mat<Cyclo>& m, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels);

// CSV flattening: one row per matrix row, polynomials as strings
std::string matrix_csv(const Mat<RatFun>& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);
std::string matrix_csv(const Mat<MultiRatFun>& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);
std::string matrix_csv(const Mat<Cyclo>& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);

std::string dump_json(const Json& j);  // canonical bytes (2-space indent + \n)

}  // namespace rsym
