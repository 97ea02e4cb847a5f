# Copyright (c) 2016 Cloudbase Solutions Srl
# Copyright (c) 2026 Fanopoly Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fanopoly.i18n import _


class FanopolyException(Exception):
    pass


class InvalidInput(FanopolyException):

    """Base exception for rejected user data (CLI exit status 1)."""
    pass


class InternalInconsistency(FanopolyException):

    """Raised when an exactly checkable postcondition does not hold.

    The CLI maps this family to exit status 2.
    """
    pass


class UnknownRootSystemType(InvalidInput):
    def __init__(self, label):
        super(UnknownRootSystemType, self).__init__(
            _("Unknown root system type '%s'. Supported factors are A<r>, "
              "B<r>, C<r>, D<r>, G2 and T<n>, joined with 'x'.") % label)


class InvalidRank(InvalidInput):
    def __init__(self, label, reason=None):
        message = _("Invalid rank for root system type '%s'") % label
        if reason:
            message = "%s: %s" % (message, reason)
        super(InvalidRank, self).__init__(message)


class UnknownConvention(InvalidInput):
    def __init__(self, label, convention):
        super(UnknownConvention, self).__init__(
            _("Coordinate convention '%(convention)s' is not available for "
              "'%(label)s'") % {'convention': convention, 'label': label})


class InvalidRational(InvalidInput):
    def __init__(self, value):
        super(InvalidRational, self).__init__(
            _("'%s' is not a rational number") % (value,))


class DimensionMismatch(InvalidInput):
    def __init__(self, vector, rank):
        super(DimensionMismatch, self).__init__(
            _("Vector %(vector)s does not have %(rank)d coordinates") % {
                'vector': list(vector), 'rank': rank})


class EmptyNormalList(InvalidInput):
    def __init__(self):
        super(EmptyNormalList, self).__init__(
            _("At least one outer facet normal is required"))


class NonPrimitiveNormal(InvalidInput):
    def __init__(self, normal):
        super(NonPrimitiveNormal, self).__init__(
            _("Normal %s is not a primitive integer vector") % (
                list(normal),))


class NormalOutsideChamber(InvalidInput):
    def __init__(self, normal):
        super(NormalOutsideChamber, self).__init__(
            _("Normal %s does not lie in the closed positive Weyl "
              "chamber") % (list(normal),))


class UnboundedPolytope(InvalidInput):
    def __init__(self, normals):
        super(UnboundedPolytope, self).__init__(
            _("The Weyl orbits of the normals %s do not bound a "
              "polytope") % ([list(u) for u in normals],))


class RedundantNormal(InvalidInput):
    """Raised when a normal supports no facet of the polytope"""

    def __init__(self, normal):
        super(RedundantNormal, self).__init__(
            _("Normal %s does not support a facet of the polytope") % (
                list(normal),))


class DegenerateSimplex(InvalidInput):
    def __init__(self, simplex):
        super(DegenerateSimplex, self).__init__(
            _("Simplex with vertices %s is degenerate") % (
                [list(v) for v in simplex],))


class DegeneratePositivePart(InternalInconsistency):
    def __init__(self, dimension, rank):
        super(DegeneratePositivePart, self).__init__(
            _("The positive part has dimension %(dim)d instead of "
              "%(rank)d") % {'dim': dimension, 'rank': rank})


class InvalidSampleCount(InvalidInput):
    def __init__(self, samples):
        super(InvalidSampleCount, self).__init__(
            _("The number of Monte-Carlo samples must be positive, got "
              "%s") % samples)


class NoAcceptedSamples(InvalidInput):
    def __init__(self, samples):
        super(NoAcceptedSamples, self).__init__(
            _("None of the %s Monte-Carlo samples fell inside the positive "
              "part") % samples)


class IndexOutOfRange(InvalidInput):
    def __init__(self, index, size):
        super(IndexOutOfRange, self).__init__(
            _("Fundamental weight index %(index)s is out of range "
              "[0, %(size)s)") % {'index': index, 'size': size})


class NonCentralDirection(InvalidInput):
    def __init__(self, xi):
        super(NonCentralDirection, self).__init__(
            _("Direction %s does not lie in the center of the Lie "
              "algebra") % (list(xi),))


class InvalidParameter(InvalidInput):
    def __init__(self, name, value):
        super(InvalidParameter, self).__init__(
            _("Invalid value %(value)s for %(name)s") % {
                'value': value, 'name': name})


class NoSignChange(InvalidInput):
    def __init__(self, dimension):
        super(NoSignChange, self).__init__(
            _("The bracket minus one does not change sign on the search "
              "grid for dimension %s") % dimension)


class NotMonotone(InternalInconsistency):
    def __init__(self, dimension, label):
        super(NotMonotone, self).__init__(
            _("The bracket for dimension %(dim)s is not decreasing past "
              "its root at I=%(label)s") % {'dim': dimension, 'label': label})


class NotSemisimple(InvalidInput):
    def __init__(self, label):
        super(NotSemisimple, self).__init__(
            _("Classification requires a semisimple group, '%s' has a "
              "nontrivial center") % label)


class UnsupportedRank(InvalidInput):
    def __init__(self, rank):
        super(UnsupportedRank, self).__init__(
            _("Classification is only available in rank 2, got rank "
              "%s") % rank)


class InvalidCutoff(InvalidInput):
    def __init__(self, value, minimum):
        super(InvalidCutoff, self).__init__(
            _("The cutoff %(value)s is below the minimum %(minimum)s") % {
                'value': value, 'minimum': minimum})


class MalformedPolytopeFile(InvalidInput):
    def __init__(self, details):
        super(MalformedPolytopeFile, self).__init__(
            _("Malformed polytope description: %s") % details)


class NegativeInverseCartanEntry(InternalInconsistency):
    def __init__(self, label, entry):
        super(NegativeInverseCartanEntry, self).__init__(
            _("Inverse Cartan matrix of '%(label)s' has the negative entry "
              "%(entry)s") % {'label': label, 'entry': entry})


class WeylGroupTooLarge(InternalInconsistency):
    def __init__(self, label, cap):
        super(WeylGroupTooLarge, self).__init__(
            _("The Weyl group of '%(label)s' exceeds %(cap)d elements") % {
                'label': label, 'cap': cap})


class PostconditionFailed(InternalInconsistency):
    def __init__(self, operation, details):
        super(PostconditionFailed, self).__init__(
            _("Postcondition of %(op)s failed: %(details)s") % {
                'op': operation, 'details': details})


class VerificationFailed(InternalInconsistency):
    """Raised when the Monte-Carlo oracle disagrees with exact moments"""

    def __init__(self, details):
        super(VerificationFailed, self).__init__(
            _("Monte-Carlo verification failed: %s") % details)
