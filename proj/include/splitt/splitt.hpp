#pragma once

#include "splitt/errors.hpp"
#include "splitt/linalg.hpp"
#include "splitt/quiver.hpp"
#include "splitt/representation.hpp"
#include "splitt/model.hpp"
#include "splitt/indec_table.hpp"
#include "splitt/derived.hpp"
#include "splitt/torsion.hpp"
#include "splitt/tstruct.hpp"
#include "splitt/kronecker.hpp"
#include "splitt/transport.hpp"
#include "splitt/report.hpp"
#include "splitt/verify.hpp"
