# -*- coding: utf-8 -*-
from django_wallcross import dimension
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


class Command(WallcrossCommand):
    help = "Prints the virtual dimension of a moduli space."

    def add_command_arguments(self, parser):
        self.add_query_arguments(parser)

    def report(self, **options):
        genus, weights, beta, profile = self.query_data(options)
        vdim = dimension.vdim_moduli(genus, weights, beta, profile)
        return Report({'vdim': vdim}, [str(vdim)])
