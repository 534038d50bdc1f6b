#ifndef ALTLIFT_ALTLIFT_HPP_
#define ALTLIFT_ALTLIFT_HPP_

#include "catalog.hpp"
#include "classify.hpp"
#include "config.hpp"
#include "datasets.hpp"
#include "egroup.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "group_table.hpp"
#include "json_io.hpp"
#include "lift.hpp"
#include "notation.hpp"
#include "numtheory.hpp"
#include "perm.hpp"

#endif  // ALTLIFT_ALTLIFT_HPP_
