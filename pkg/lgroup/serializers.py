# lgroup/serializers.py

from rest_framework import serializers

from .exceptions import ElementSyntaxError, InvalidWeightsError, TubularWeightError
from .grading import AXES, WeightTriple
from .parsing import parse_element, parse_weights
from .quotient import in_z_omega, omega_index


class WeightTripleField(serializers.Field):
    default_error_messages = {
        'invalid': 'Expected weights "p1,p2,p3" with every p_i >= 2 ({error}).',
    }

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        try:
            if isinstance(data, (list, tuple)):
                return WeightTriple(*(int(p_i) for p_i in data))
            return parse_weights(data)
        except (InvalidWeightsError, TypeError, ValueError) as exc:
            self.fail('invalid', error=exc)


class LElementField(serializers.Field):
    """Element in text syntax; parsing needs ``context['weights']``."""

    default_error_messages = {
        'invalid': 'Invalid element {value!r}: {error}',
        'no_weights': 'Weights are required before elements can be parsed.',
    }

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        weights = self.context.get('weights')
        if weights is None:
            self.fail('no_weights')
        try:
            return parse_element(weights, data)
        except ElementSyntaxError as exc:
            self.fail('invalid', value=data, error=exc)


class LElementSerializer(serializers.Serializer):
    element = serializers.SerializerMethodField()
    normal_form = serializers.SerializerMethodField()
    delta = serializers.SerializerMethodField()
    nonnegative = serializers.SerializerMethodField()
    omega_multiple = serializers.SerializerMethodField()

    def get_element(self, obj):
        return str(obj)

    def get_normal_form(self, obj):
        return obj.quadruple()

    def get_delta(self, obj):
        return obj.delta()

    def get_nonnegative(self, obj):
        return obj.is_nonneg()

    def get_omega_multiple(self, obj):
        """r with obj = r*omega; null when there is none or the weights are tubular."""
        try:
            return in_z_omega(obj)
        except TubularWeightError:
            return None


class WeightTripleSerializer(serializers.Serializer):
    weights = serializers.SerializerMethodField()
    p = serializers.IntegerField()
    delta_omega = serializers.SerializerMethodField()
    weight_type = serializers.SerializerMethodField()
    omega = serializers.SerializerMethodField()
    xbar = serializers.SerializerMethodField()
    omega_index = serializers.SerializerMethodField()

    def get_weights(self, obj):
        return str(obj)

    def get_delta_omega(self, obj):
        return obj.delta_omega()

    def get_weight_type(self, obj):
        return obj.classify().value

    def get_omega(self, obj):
        return str(obj.omega())

    def get_xbar(self, obj):
        return [str(obj.xbar(j)) for j in AXES]

    def get_omega_index(self, obj):
        if obj.is_tubular:
            return None
        return omega_index(obj)
