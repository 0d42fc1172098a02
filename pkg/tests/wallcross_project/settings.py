DEBUG = True
USE_TZ = True
DATABASES = {}
INSTALLED_APPS = [
    "django_wallcross",
]
LOGGING = {}
SECRET_KEY = "yay"

WSM_THREADS = 1
WSM_MAX_CHAMBER_LABELS = 5
WSM_FEASIBILITY_BACKEND = 'django_wallcross.linear.simplex_feasible_point'
WSM_OUTPUT_FORMAT = 'table'
