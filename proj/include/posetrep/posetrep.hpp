#pragma once

#include "posetrep/errors.hpp"
#include "posetrep/field.hpp"
#include "posetrep/matrix.hpp"
#include "posetrep/subspace.hpp"
#include "posetrep/poset.hpp"
#include "posetrep/critical.hpp"
#include "posetrep/dimension.hpp"
#include "posetrep/tits_form.hpp"
#include "posetrep/matrix_rep.hpp"
#include "posetrep/morphisms.hpp"
#include "posetrep/decomposition.hpp"
#include "posetrep/derivation.hpp"
#include "posetrep/enumeration.hpp"
#include "posetrep/classifier.hpp"
