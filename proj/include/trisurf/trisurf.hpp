#pragma once

#include "trisurf/catalog.hpp"
#include "trisurf/certificate.hpp"
#include "trisurf/complex.hpp"
#include "trisurf/enumeration.hpp"
#include "trisurf/error.hpp"
#include "trisurf/graph.hpp"
#include "trisurf/io.hpp"
#include "trisurf/isomorphism.hpp"
#include "trisurf/permutation.hpp"
#include "trisurf/polyhedral.hpp"
#include "trisurf/proof_maps.hpp"
